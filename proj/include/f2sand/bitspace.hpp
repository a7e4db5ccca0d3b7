#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace f2sand {

class MultiplicityVector;

/// Largest supported dimension; vertex indices of F_2^r must fit in a word.
inline constexpr unsigned kMaxDim = 16;

/// An element of F_2^r. Bit j of the word is coordinate j+1.
///
/// Serialized as a binary string of length r with the most significant
/// coordinate first, so "100" (r = 3) is the vector with only coordinate 3 set.
class BitVector {
 public:
  BitVector(unsigned r, std::uint32_t bits);

  static BitVector parse(std::string_view text);
  static BitVector zero(unsigned r) { return BitVector(r, 0); }
  static BitVector basis(unsigned r, unsigned coordinate);

  unsigned dim() const noexcept { return r_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool coordinate(unsigned j) const noexcept { return (bits_ >> (j - 1)) & 1u; }
  bool is_zero() const noexcept { return bits_ == 0; }

  std::string str() const;

  BitVector operator^(const BitVector& other) const;
  bool operator==(const BitVector&) const = default;
  auto operator<=>(const BitVector&) const = default;

 private:
  std::uint32_t r_;
  std::uint32_t bits_;
};

inline bool dot_bits(std::uint32_t u, std::uint32_t v) noexcept {
  return std::popcount(u & v) & 1;
}

/// Parity of popcount(u AND v). Throws std::invalid_argument on dimension mismatch.
bool dot(const BitVector& u, const BitVector& v);

unsigned weight(const BitVector& v) noexcept;

/// All 2^r - 1 nonzero vectors in ascending bit order.
std::vector<BitVector> enumerate_nonzero(unsigned r);

void check_dimension(unsigned r);

/// An invertible r x r matrix over F_2, stored as rows. Row i (0-based)
/// produces coordinate i+1 of the image: (T u)_{i+1} = dot(row_i, u).
class GLMatrix {
 public:
  /// Throws std::invalid_argument unless the rows form an invertible matrix.
  GLMatrix(unsigned r, std::vector<std::uint32_t> rows);

  static GLMatrix identity(unsigned r);
  static GLMatrix parse(std::span<const std::string> rows);
  /// Permutation matrix that swaps coordinates a and b (1-based).
  static GLMatrix swap(unsigned r, unsigned a, unsigned b);
  /// Elementary transvection: coordinate `target` += coordinate `source`.
  static GLMatrix transvection(unsigned r, unsigned target, unsigned source);

  unsigned dim() const noexcept { return r_; }
  std::span<const std::uint32_t> rows() const noexcept { return rows_; }
  std::vector<std::string> row_strings() const;

  std::uint32_t apply_bits(std::uint32_t u) const noexcept;
  GLMatrix inverse() const;
  GLMatrix operator*(const GLMatrix& rhs) const;
  bool operator==(const GLMatrix&) const = default;

  static bool is_invertible(unsigned r, std::span<const std::uint32_t> rows);

 private:
  unsigned r_;
  std::vector<std::uint32_t> rows_;
};

BitVector apply_gl(const GLMatrix& t, const BitVector& u);

/// Every element of GL_r(F_2); only for r <= 4 (|GL_4| = 20160).
std::vector<GLMatrix> enumerate_gl(unsigned r);

/// Adjacent coordinate swaps plus one transvection; these generate GL_r(F_2).
std::vector<GLMatrix> gl_generators(unsigned r);

/// For r <= 4: perm[g][u] = g(u) for every group element g and u in F_2^r.
/// Built once per r and shared.
const std::vector<std::array<std::uint8_t, 16>>& gl_action_table(unsigned r);

/// Lexicographically minimal multiplicity tuple over the GL_r(F_2)-orbit of m.
/// Full group enumeration for r <= 4, orbit BFS over generators above that.
MultiplicityVector canonical_form(const MultiplicityVector& m);

}  // namespace f2sand
