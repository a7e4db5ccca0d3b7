#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "f2sand/cayley.hpp"

namespace f2sand {

/// 2-adic valuation: a signed integer, or infinite for zero.
class Valuation {
 public:
  constexpr explicit Valuation(long value) : value_(value), infinite_(false) {}
  static constexpr Valuation infinite() { return Valuation(); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Throws std::domain_error when infinite.
  long value() const;
  std::string str() const;

  bool operator==(const Valuation&) const = default;

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}

  long value_;
  bool infinite_;
};

Valuation v2(const mpz_class& x);
Valuation v2(const mpq_class& x);
Valuation v2(std::int64_t x);

/// Finite v_2 of a nonzero integer; shorthand used throughout.
unsigned v2_finite(const mpz_class& x);
unsigned v2_finite(std::uint64_t x);

/// floor(log2 x) by bit length, x >= 1.
unsigned floor_log2(std::uint64_t x);

/// Number of carries when adding (a - b) and b in binary. Throws if a < b.
unsigned kummer_v2_binomial(std::uint64_t a, std::uint64_t b);

/// The element of [p, p + q] with the largest v_2; p >= 1. The maximizer of
/// v_2 over any run of consecutive integers is unique; a second maximizer
/// throws std::logic_error.
std::uint64_t unique_max_v2_in_interval(std::uint64_t p, std::uint64_t q);

/// v_2 of sum_{i=0}^{q} C(q, i) / (p + i), via the closed form
/// kummer(q, u - p) - v_2(u) with u the unique v_2-maximizer of [p, p + q].
long binomial_sum_v2(std::uint64_t p, std::uint64_t q);

/// max over 1 <= x < bound of v_2(x) + x; 0 when the range is empty.
unsigned max_v2_plus_x_below(unsigned bound);

/// v_2(c_1(Q_n)) = max{ max_{x<n} v_2(x) + x, v_2(n) + n - 1 }, n >= 2.
unsigned top_cyclic_qn_v2(unsigned n);
/// v_2 of c_2(Q_n) = ... = c_{n-1}(Q_n) = max_{x<n} v_2(x) + x, n >= 3.
unsigned second_cyclic_qn_v2(unsigned n);
/// Conjectural: v_2(c_n(Q_n)) = max{ max_{x<n-1} v_2(x) + x, v_2(n-1) + n - 3 }, n >= 3.
unsigned conjectured_nth_qn_v2(unsigned n);
/// Conjectural: v_2(c_{n+1}(Q_n)) = max_{x<n-1} v_2(x) + x, n >= 4.
unsigned conjectured_nplus1_qn_v2(unsigned n);

/// floor(log2 n) + r - 1: upper bound on v_2(c_1) for n generators in F_2^r.
unsigned c1_upper_bound_v2(std::uint64_t n, unsigned r);

/// 2^(r-2) * lcm of the nonzero eigenvalues; c_1 divides it. Requires r >= 2.
mpz_class c1_divisor_bound(const MultiplicityVector& m);

}  // namespace f2sand
