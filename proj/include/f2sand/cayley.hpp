#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "f2sand/bitspace.hpp"
#include "f2sand/integer_matrix.hpp"

namespace f2sand {

/// Generating multiset of a Cayley graph of F_2^r, stored densely by vertex
/// index: mu[u] is the multiplicity of generator u, mu[0] is always 0.
///
/// Invariants (checked by every factory): the support spans F_2^r and the
/// total n = sum of multiplicities is at least 1. Zero multiplicities are
/// allowed as long as the remaining support still spans.
class MultiplicityVector {
 public:
  static MultiplicityVector from_dense(unsigned r, std::vector<std::uint64_t> mu);
  /// `tuple[k]` is the multiplicity of the vector with bits k+1.
  static MultiplicityVector from_tuple(unsigned r, std::span<const std::uint64_t> tuple);
  static MultiplicityVector from_map(unsigned r, const std::map<BitVector, std::uint64_t>& mu);
  /// Generators listed with repetition; r is taken from the columns.
  static MultiplicityVector from_columns(std::span<const BitVector> columns);

  unsigned dim() const noexcept { return r_; }
  std::uint64_t total() const noexcept { return n_; }
  std::uint64_t at(std::uint32_t u) const { return mu_.at(u); }
  std::span<const std::uint64_t> dense() const noexcept { return mu_; }
  std::uint32_t vertex_count() const noexcept { return std::uint32_t{1} << r_; }

  /// Multiplicities in enumerate_nonzero order.
  std::vector<std::uint64_t> tuple() const;
  std::vector<BitVector> support() const;
  std::uint64_t gcd() const;
  /// Number of generators with even multiplicity (zeros count as even).
  unsigned even_count() const;

  /// Compact text form, e.g. "r=2 {01:1,10:1}".
  std::string describe() const;

  bool operator==(const MultiplicityVector&) const = default;

 private:
  MultiplicityVector(unsigned r, std::vector<std::uint64_t> mu);

  unsigned r_;
  std::uint64_t n_;
  std::vector<std::uint64_t> mu_;
};

/// True when the vectors with nonzero multiplicity span F_2^r.
bool support_spans(unsigned r, std::span<const std::uint64_t> dense);

MultiplicityVector hypercube(unsigned n);
/// Every nonzero vector with multiplicity one: the complete graph on 2^r vertices.
MultiplicityVector complete_generators(unsigned r);

/// Diagonal n, off-diagonal (u, v) entry -mu[u xor v]; vertices in ascending bit order.
IntegerMatrix laplacian(const MultiplicityVector& m);

/// Eigenvalue lambda_u of the eigenvector f_u, for every u including 0.
class Spectrum {
 public:
  explicit Spectrum(unsigned r, std::vector<std::uint64_t> lambda);

  unsigned dim() const noexcept { return r_; }
  std::uint64_t at(std::uint32_t u) const { return lambda_.at(u); }
  std::span<const std::uint64_t> values() const noexcept { return lambda_; }
  /// Sorted eigenvalue multiset, 0 first.
  std::vector<std::uint64_t> multiset() const;
  /// lcm of the nonzero eigenvalues.
  mpz_class lcm_nonzero() const;

 private:
  unsigned r_;
  std::vector<std::uint64_t> lambda_;
};

/// lambda_u = 2 * (sum of mu_w over w with dot(u, w) = 1).
Spectrum spectrum(const MultiplicityVector& m);

/// Generators (with multiplicity) sum to a nonzero vector.
bool is_generic(const MultiplicityVector& m);

/// mu_u mod 2 in enumerate_nonzero order.
std::vector<std::uint8_t> parity_signature(const MultiplicityVector& m);

/// Kirchhoff: product of nonzero eigenvalues divided by 2^r.
mpz_class spanning_tree_count(const MultiplicityVector& m);

/// Multiplies every multiplicity by c >= 1.
MultiplicityVector scale(const MultiplicityVector& m, std::uint64_t c);

}  // namespace f2sand
