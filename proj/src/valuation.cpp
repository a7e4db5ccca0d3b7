#include "f2sand/valuation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace f2sand {

long Valuation::value() const {
  if (infinite_) throw std::domain_error("valuation of zero is infinite");
  return value_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : std::to_string(value_); }

Valuation v2(const mpz_class& x) {
  if (x == 0) return Valuation::infinite();
  return Valuation(static_cast<long>(mpz_scan1(x.get_mpz_t(), 0)));
}

Valuation v2(const mpq_class& x) {
  if (x == 0) return Valuation::infinite();
  return Valuation(v2(x.get_num()).value() - v2(x.get_den()).value());
}

Valuation v2(std::int64_t x) {
  if (x == 0) return Valuation::infinite();
  return Valuation(std::countr_zero(static_cast<std::uint64_t>(x)));
}

unsigned v2_finite(const mpz_class& x) {
  if (x == 0) throw std::domain_error("v2_finite of zero");
  return static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0));
}

unsigned v2_finite(std::uint64_t x) {
  if (x == 0) throw std::domain_error("v2_finite of zero");
  return static_cast<unsigned>(std::countr_zero(x));
}

unsigned floor_log2(std::uint64_t x) {
  if (x == 0) throw std::domain_error("floor_log2 of zero");
  return static_cast<unsigned>(std::bit_width(x) - 1);
}

unsigned kummer_v2_binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) throw std::invalid_argument("kummer_v2_binomial needs b <= a");
  return static_cast<unsigned>(std::popcount(b) + std::popcount(a - b) - std::popcount(a));
}

std::uint64_t unique_max_v2_in_interval(std::uint64_t p, std::uint64_t q) {
  if (p == 0) throw std::invalid_argument("interval must start at 1 or later");
  const std::uint64_t hi = p + q;
  for (int k = std::bit_width(hi) - 1; k >= 0; --k) {
    const std::uint64_t step = std::uint64_t{1} << k;
    const std::uint64_t first = (p + step - 1) / step * step;
    if (first > hi) continue;
    if (first + step <= hi) throw std::logic_error("two integers share the maximal 2-adic valuation");
    return first;
  }
  throw std::logic_error("empty interval");
}

long binomial_sum_v2(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t u = unique_max_v2_in_interval(p, q);
  return static_cast<long>(kummer_v2_binomial(q, u - p)) - static_cast<long>(v2_finite(u));
}

unsigned max_v2_plus_x_below(unsigned bound) {
  unsigned best = 0;
  for (unsigned x = 1; x < bound; ++x) best = std::max(best, v2_finite(std::uint64_t{x}) + x);
  return best;
}

unsigned top_cyclic_qn_v2(unsigned n) {
  if (n < 2) throw std::invalid_argument("top_cyclic_qn_v2 needs n >= 2");
  return std::max(max_v2_plus_x_below(n), v2_finite(std::uint64_t{n}) + n - 1);
}

unsigned second_cyclic_qn_v2(unsigned n) {
  if (n < 3) throw std::invalid_argument("second_cyclic_qn_v2 needs n >= 3");
  return max_v2_plus_x_below(n);
}

unsigned conjectured_nth_qn_v2(unsigned n) {
  if (n < 3) throw std::invalid_argument("conjectured_nth_qn_v2 needs n >= 3");
  return std::max(max_v2_plus_x_below(n - 1), v2_finite(std::uint64_t{n - 1}) + n - 3);
}

unsigned conjectured_nplus1_qn_v2(unsigned n) {
  if (n < 4) throw std::invalid_argument("conjectured_nplus1_qn_v2 needs n >= 4");
  return max_v2_plus_x_below(n - 1);
}

unsigned c1_upper_bound_v2(std::uint64_t n, unsigned r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  return floor_log2(n) + r - 1;
}

mpz_class c1_divisor_bound(const MultiplicityVector& m) {
  if (m.dim() < 2) throw std::invalid_argument("c1_divisor_bound needs r >= 2");
  mpz_class out = spectrum(m).lcm_nonzero();
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), m.dim() - 2);
  return out;
}

}  // namespace f2sand
