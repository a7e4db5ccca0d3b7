#include "f2sand/cayley.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace f2sand {

bool support_spans(unsigned r, std::span<const std::uint64_t> dense) {
  // Incremental F_2 basis keyed by leading bit.
  std::array<std::uint32_t, kMaxDim> basis{};
  unsigned rank = 0;
  for (std::uint32_t u = 1; u < dense.size(); ++u) {
    if (dense[u] == 0) continue;
    std::uint32_t v = u;
    for (int bit = static_cast<int>(r) - 1; bit >= 0 && v != 0; --bit) {
      if (!((v >> bit) & 1u)) continue;
      if (basis[bit] == 0) {
        basis[bit] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[bit];
      }
    }
    if (rank == r) return true;
  }
  return rank == r;
}

MultiplicityVector::MultiplicityVector(unsigned r, std::vector<std::uint64_t> mu)
    : r_(r), n_(0), mu_(std::move(mu)) {
  check_dimension(r);
  if (mu_.size() != (std::size_t{1} << r)) {
    throw std::invalid_argument("multiplicity vector must have 2^r entries");
  }
  if (mu_[0] != 0) throw std::invalid_argument("the zero vector cannot be a generator");
  for (auto v : mu_) {
    if (n_ + v < n_) throw std::overflow_error("total multiplicity overflows");
    n_ += v;
  }
  if (n_ == 0) throw std::invalid_argument("multiplicity vector is empty");
  if (!support_spans(r, mu_)) throw std::invalid_argument("support does not span F_2^r");
}

MultiplicityVector MultiplicityVector::from_dense(unsigned r, std::vector<std::uint64_t> mu) {
  return MultiplicityVector(r, std::move(mu));
}

MultiplicityVector MultiplicityVector::from_tuple(unsigned r, std::span<const std::uint64_t> tuple) {
  check_dimension(r);
  if (tuple.size() != (std::size_t{1} << r) - 1) {
    throw std::invalid_argument("multiplicity tuple must have 2^r - 1 entries");
  }
  std::vector<std::uint64_t> mu(std::size_t{1} << r, 0);
  std::copy(tuple.begin(), tuple.end(), mu.begin() + 1);
  return MultiplicityVector(r, std::move(mu));
}

MultiplicityVector MultiplicityVector::from_map(unsigned r, const std::map<BitVector, std::uint64_t>& mu) {
  check_dimension(r);
  std::vector<std::uint64_t> dense(std::size_t{1} << r, 0);
  for (const auto& [u, mult] : mu) {
    if (u.dim() != r) throw std::invalid_argument("generator " + u.str() + " has the wrong dimension");
    if (u.is_zero()) throw std::invalid_argument("the zero vector cannot be a generator");
    dense[u.bits()] += mult;
  }
  return MultiplicityVector(r, std::move(dense));
}

MultiplicityVector MultiplicityVector::from_columns(std::span<const BitVector> columns) {
  if (columns.empty()) throw std::invalid_argument("generator list is empty");
  const unsigned r = columns.front().dim();
  std::vector<std::uint64_t> dense(std::size_t{1} << r, 0);
  for (const auto& u : columns) {
    if (u.dim() != r) throw std::invalid_argument("generators have mixed dimensions");
    if (u.is_zero()) throw std::invalid_argument("the zero vector cannot be a generator");
    ++dense[u.bits()];
  }
  return MultiplicityVector(r, std::move(dense));
}

std::vector<std::uint64_t> MultiplicityVector::tuple() const { return {mu_.begin() + 1, mu_.end()}; }

std::vector<BitVector> MultiplicityVector::support() const {
  std::vector<BitVector> out;
  for (std::uint32_t u = 1; u < mu_.size(); ++u) {
    if (mu_[u] != 0) out.emplace_back(r_, u);
  }
  return out;
}

std::uint64_t MultiplicityVector::gcd() const {
  std::uint64_t g = 0;
  for (auto v : mu_) g = std::gcd(g, v);
  return g;
}

unsigned MultiplicityVector::even_count() const {
  return static_cast<unsigned>(std::count_if(mu_.begin() + 1, mu_.end(), [](auto v) { return v % 2 == 0; }));
}

std::string MultiplicityVector::describe() const {
  std::ostringstream out;
  out << "r=" << r_ << " {";
  bool first = true;
  for (std::uint32_t u = 1; u < mu_.size(); ++u) {
    if (mu_[u] == 0) continue;
    out << (first ? "" : ",") << BitVector(r_, u).str() << ':' << mu_[u];
    first = false;
  }
  out << '}';
  return out.str();
}

MultiplicityVector hypercube(unsigned n) {
  check_dimension(n);
  std::vector<std::uint64_t> mu(std::size_t{1} << n, 0);
  for (unsigned j = 0; j < n; ++j) mu[std::size_t{1} << j] = 1;
  return MultiplicityVector::from_dense(n, std::move(mu));
}

MultiplicityVector complete_generators(unsigned r) {
  check_dimension(r);
  std::vector<std::uint64_t> mu(std::size_t{1} << r, 1);
  mu[0] = 0;
  return MultiplicityVector::from_dense(r, std::move(mu));
}

IntegerMatrix laplacian(const MultiplicityVector& m) {
  const std::uint32_t size = m.vertex_count();
  IntegerMatrix out(size, size);
  const auto mu = m.dense();
  for (std::uint32_t u = 0; u < size; ++u) {
    for (std::uint32_t v = 0; v < size; ++v) {
      if (u == v) {
        out(u, v) = static_cast<unsigned long>(m.total());
      } else if (mu[u ^ v] != 0) {
        out(u, v) = -mpz_class(static_cast<unsigned long>(mu[u ^ v]));
      }
    }
  }
  return out;
}

Spectrum::Spectrum(unsigned r, std::vector<std::uint64_t> lambda) : r_(r), lambda_(std::move(lambda)) {
  check_dimension(r);
  if (lambda_.size() != (std::size_t{1} << r)) throw std::invalid_argument("spectrum must have 2^r entries");
}

std::vector<std::uint64_t> Spectrum::multiset() const {
  auto out = lambda_;
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class Spectrum::lcm_nonzero() const {
  mpz_class out = 1;
  for (auto v : lambda_) {
    if (v != 0) mpz_lcm_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(v));
  }
  return out;
}

Spectrum spectrum(const MultiplicityVector& m) {
  const std::uint32_t size = m.vertex_count();
  const auto mu = m.dense();
  std::vector<std::uint64_t> lambda(size, 0);
  for (std::uint32_t u = 0; u < size; ++u) {
    std::uint64_t s = 0;
    for (std::uint32_t w = 1; w < size; ++w) {
      if (dot_bits(u, w)) s += mu[w];
    }
    lambda[u] = 2 * s;
  }
  return Spectrum(m.dim(), std::move(lambda));
}

bool is_generic(const MultiplicityVector& m) {
  std::uint32_t sum = 0;
  const auto mu = m.dense();
  for (std::uint32_t u = 1; u < mu.size(); ++u) {
    if (mu[u] % 2 == 1) sum ^= u;
  }
  return sum != 0;
}

std::vector<std::uint8_t> parity_signature(const MultiplicityVector& m) {
  std::vector<std::uint8_t> out;
  for (auto v : m.tuple()) out.push_back(static_cast<std::uint8_t>(v % 2));
  return out;
}

mpz_class spanning_tree_count(const MultiplicityVector& m) {
  mpz_class product = 1;
  const auto spec = spectrum(m);
  for (auto v : spec.values()) {
    if (v != 0) product *= static_cast<unsigned long>(v);
  }
  mpz_class out;
  mpz_tdiv_q_2exp(out.get_mpz_t(), product.get_mpz_t(), m.dim());
  return out;
}

MultiplicityVector scale(const MultiplicityVector& m, std::uint64_t c) {
  if (c == 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<std::uint64_t> mu(m.dense().begin(), m.dense().end());
  for (auto& v : mu) v *= c;
  return MultiplicityVector::from_dense(m.dim(), std::move(mu));
}

}  // namespace f2sand
