#include "f2sand/bitspace.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "f2sand/cayley.hpp"

namespace f2sand {

void check_dimension(unsigned r) {
  if (r < 1 || r > kMaxDim) {
    throw std::invalid_argument("dimension r must satisfy 1 <= r <= 16, got " + std::to_string(r));
  }
}

BitVector::BitVector(unsigned r, std::uint32_t bits) : r_(r), bits_(bits) {
  check_dimension(r);
  if (bits >= (std::uint32_t{1} << r)) {
    throw std::invalid_argument("bit vector value out of range for dimension " + std::to_string(r));
  }
}

BitVector BitVector::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxDim) {
    throw std::invalid_argument("bit string must have length 1..16: '" + std::string(text) + "'");
  }
  std::uint32_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may contain only 0 and 1: '" + std::string(text) + "'");
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return BitVector(static_cast<unsigned>(text.size()), bits);
}

BitVector BitVector::basis(unsigned r, unsigned coordinate) {
  if (coordinate < 1 || coordinate > r) {
    throw std::invalid_argument("coordinate out of range");
  }
  return BitVector(r, std::uint32_t{1} << (coordinate - 1));
}

std::string BitVector::str() const {
  std::string out(r_, '0');
  for (unsigned j = 0; j < r_; ++j) {
    if ((bits_ >> j) & 1u) out[r_ - 1 - j] = '1';
  }
  return out;
}

BitVector BitVector::operator^(const BitVector& other) const {
  if (r_ != other.r_) throw std::invalid_argument("dimension mismatch");
  return BitVector(r_, bits_ ^ other.bits_);
}

bool dot(const BitVector& u, const BitVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dot: dimension mismatch");
  return dot_bits(u.bits(), v.bits());
}

unsigned weight(const BitVector& v) noexcept { return static_cast<unsigned>(std::popcount(v.bits())); }

std::vector<BitVector> enumerate_nonzero(unsigned r) {
  check_dimension(r);
  std::vector<BitVector> out;
  out.reserve((std::size_t{1} << r) - 1);
  for (std::uint32_t u = 1; u < (std::uint32_t{1} << r); ++u) out.emplace_back(r, u);
  return out;
}

// ---------------------------------------------------------------------------
// GLMatrix

bool GLMatrix::is_invertible(unsigned r, std::span<const std::uint32_t> rows) {
  if (rows.size() != r) return false;
  std::vector<std::uint32_t> work(rows.begin(), rows.end());
  unsigned rank = 0;
  for (unsigned bit = 0; bit < r; ++bit) {
    auto pivot = std::find_if(work.begin() + rank, work.end(),
                              [bit](std::uint32_t w) { return (w >> bit) & 1u; });
    if (pivot == work.end()) continue;
    std::iter_swap(work.begin() + rank, pivot);
    for (unsigned i = 0; i < r; ++i) {
      if (i != rank && ((work[i] >> bit) & 1u)) work[i] ^= work[rank];
    }
    ++rank;
  }
  return rank == r;
}

GLMatrix::GLMatrix(unsigned r, std::vector<std::uint32_t> rows) : r_(r), rows_(std::move(rows)) {
  check_dimension(r);
  for (auto row : rows_) {
    if (row >= (std::uint32_t{1} << r)) throw std::invalid_argument("GL row out of range");
  }
  if (!is_invertible(r, rows_)) throw std::invalid_argument("matrix is not invertible over F_2");
}

GLMatrix GLMatrix::identity(unsigned r) {
  check_dimension(r);
  std::vector<std::uint32_t> rows(r);
  for (unsigned i = 0; i < r; ++i) rows[i] = std::uint32_t{1} << i;
  return GLMatrix(r, std::move(rows));
}

GLMatrix GLMatrix::parse(std::span<const std::string> rows) {
  if (rows.empty()) throw std::invalid_argument("GL matrix needs at least one row");
  std::vector<std::uint32_t> parsed;
  for (const auto& text : rows) {
    auto v = BitVector::parse(text);
    if (v.dim() != rows.size()) throw std::invalid_argument("GL matrix must be square");
    parsed.push_back(v.bits());
  }
  return GLMatrix(static_cast<unsigned>(rows.size()), std::move(parsed));
}

GLMatrix GLMatrix::swap(unsigned r, unsigned a, unsigned b) {
  auto rows = identity(r).rows_;
  std::swap(rows.at(a - 1), rows.at(b - 1));
  return GLMatrix(r, std::move(rows));
}

GLMatrix GLMatrix::transvection(unsigned r, unsigned target, unsigned source) {
  if (target == source) throw std::invalid_argument("transvection needs distinct coordinates");
  auto rows = identity(r).rows_;
  rows.at(target - 1) |= std::uint32_t{1} << (source - 1);
  return GLMatrix(r, std::move(rows));
}

std::vector<std::string> GLMatrix::row_strings() const {
  std::vector<std::string> out;
  for (auto row : rows_) out.push_back(BitVector(r_, row).str());
  return out;
}

std::uint32_t GLMatrix::apply_bits(std::uint32_t u) const noexcept {
  std::uint32_t out = 0;
  for (unsigned i = 0; i < r_; ++i) out |= static_cast<std::uint32_t>(dot_bits(rows_[i], u)) << i;
  return out;
}

GLMatrix GLMatrix::operator*(const GLMatrix& rhs) const {
  if (r_ != rhs.r_) throw std::invalid_argument("GL product: dimension mismatch");
  // Row i of (A B) is the combination of B's rows selected by row i of A.
  std::vector<std::uint32_t> rows(r_, 0);
  for (unsigned i = 0; i < r_; ++i) {
    for (unsigned k = 0; k < r_; ++k) {
      if ((rows_[i] >> k) & 1u) rows[i] ^= rhs.rows_[k];
    }
  }
  return GLMatrix(r_, std::move(rows));
}

GLMatrix GLMatrix::inverse() const {
  // Gauss-Jordan on [A | I].
  std::vector<std::uint32_t> a = rows_;
  std::vector<std::uint32_t> inv = identity(r_).rows_;
  for (unsigned col = 0; col < r_; ++col) {
    unsigned pivot = col;
    while (!((a[pivot] >> col) & 1u)) ++pivot;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    for (unsigned i = 0; i < r_; ++i) {
      if (i != col && ((a[i] >> col) & 1u)) {
        a[i] ^= a[col];
        inv[i] ^= inv[col];
      }
    }
  }
  return GLMatrix(r_, std::move(inv));
}

BitVector apply_gl(const GLMatrix& t, const BitVector& u) {
  if (t.dim() != u.dim()) throw std::invalid_argument("apply_gl: dimension mismatch");
  return BitVector(u.dim(), t.apply_bits(u.bits()));
}

std::vector<GLMatrix> enumerate_gl(unsigned r) {
  check_dimension(r);
  if (r > 4) throw std::invalid_argument("full GL enumeration is limited to r <= 4");
  std::vector<GLMatrix> out;
  const std::uint32_t size = std::uint32_t{1} << r;
  std::vector<std::uint32_t> rows(r, 0);
  // Odometer over all r-tuples of nonzero rows; keep the invertible ones.
  auto recurse = [&](auto&& self, unsigned depth) -> void {
    if (depth == r) {
      if (GLMatrix::is_invertible(r, rows)) out.emplace_back(r, rows);
      return;
    }
    for (std::uint32_t row = 1; row < size; ++row) {
      rows[depth] = row;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<GLMatrix> gl_generators(unsigned r) {
  check_dimension(r);
  std::vector<GLMatrix> gens;
  for (unsigned a = 1; a < r; ++a) gens.push_back(GLMatrix::swap(r, a, a + 1));
  if (r >= 2) gens.push_back(GLMatrix::transvection(r, 1, 2));
  return gens;
}

const std::vector<std::array<std::uint8_t, 16>>& gl_action_table(unsigned r) {
  check_dimension(r);
  if (r > 4) throw std::invalid_argument("GL action table is limited to r <= 4");
  static std::array<std::vector<std::array<std::uint8_t, 16>>, 5> tables;
  static std::array<std::once_flag, 5> flags;
  std::call_once(flags[r], [r] {
    for (const auto& g : enumerate_gl(r)) {
      std::array<std::uint8_t, 16> perm{};
      for (std::uint32_t u = 0; u < (std::uint32_t{1} << r); ++u) {
        perm[u] = static_cast<std::uint8_t>(g.apply_bits(u));
      }
      tables[r].push_back(perm);
    }
  });
  return tables[r];
}

// ---------------------------------------------------------------------------
// Canonical forms. The orbit of mu consists of the tuples u -> mu[g(u)] over
// all g in GL_r; we keep the lexicographically smallest.

namespace {

MultiplicityVector canonical_small(const MultiplicityVector& m) {
  const unsigned r = m.dim();
  const auto mu = m.dense();
  const std::uint32_t size = m.vertex_count();
  std::vector<std::uint64_t> best(mu.begin(), mu.end());
  std::vector<std::uint64_t> candidate(size, 0);
  for (const auto& perm : gl_action_table(r)) {
    for (std::uint32_t u = 1; u < size; ++u) candidate[u] = mu[perm[u]];
    if (std::lexicographical_compare(candidate.begin() + 1, candidate.end(), best.begin() + 1, best.end())) {
      best = candidate;
    }
  }
  return MultiplicityVector::from_dense(r, std::move(best));
}

MultiplicityVector canonical_bfs(const MultiplicityVector& m) {
  const unsigned r = m.dim();
  const std::uint32_t size = m.vertex_count();
  // Generators are involutions, so mu o g^{-1} = mu o g.
  std::vector<std::vector<std::uint32_t>> perms;
  for (const auto& g : gl_generators(r)) {
    std::vector<std::uint32_t> p(size);
    for (std::uint32_t u = 0; u < size; ++u) p[u] = g.apply_bits(u);
    perms.push_back(std::move(p));
  }
  using Tuple = std::vector<std::uint64_t>;
  Tuple start(m.dense().begin(), m.dense().end());
  std::set<Tuple> seen{start};
  std::deque<Tuple> queue{start};
  while (!queue.empty()) {
    Tuple cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : perms) {
      Tuple next(size, 0);
      for (std::uint32_t u = 1; u < size; ++u) next[u] = cur[p[u]];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  // std::set orders lexicographically and mu[0] = 0 everywhere.
  return MultiplicityVector::from_dense(r, *seen.begin());
}

}  // namespace

MultiplicityVector canonical_form(const MultiplicityVector& m) {
  return m.dim() <= 4 ? canonical_small(m) : canonical_bfs(m);
}

}  // namespace f2sand
