#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "f2sand/cayley.hpp"
#include "f2sand/exactla.hpp"

namespace f2sand {

/// The face {u : u_S = d} of the r-cube. `coords` is S as a bit mask over
/// coordinates (bit j is coordinate j+1); `pattern` holds d on those bits and
/// is zero elsewhere. d != 0, so the face never contains the origin.
struct FaceCondition {
  std::uint32_t coords;
  std::uint32_t pattern;

  unsigned size() const noexcept;
  bool contains(std::uint32_t u) const noexcept { return (u & coords) == pattern; }
};

/// All faces with min_size <= |S| <= r and d != 0.
std::vector<FaceCondition> face_conditions(unsigned r, unsigned min_size);

/// Additive order of x_j - 1 (j is a 1-based coordinate): the least C with
/// C / 2^(r-2) * sum_{u.v = 1, u_j = 1} 1/lambda_u integral for every v.
/// Exact rational arithmetic. Requires r >= 2.
mpz_class monomial_order(const MultiplicityVector& m, unsigned j);

/// Maximum of monomial_order over all j. Equals c_1 when the monomial orders
/// are totally ordered by divisibility (e.g. hypercubes), not in general.
mpz_class c1_via_monomial_orders(const MultiplicityVector& m);
/// Lcm of monomial_order over all j: the exponent of the group generated by
/// the x_j - 1, which is c_1.
mpz_class c1_via_monomial_lcm(const MultiplicityVector& m);

enum class FaceRange { kAtLeastTwo, kAtLeastOne };

/// Least C with C / 2^(r-|S|) * sum_{u_S = d} 1/lambda_u integral for every
/// face in range. Requires r >= 2.
mpz_class c1_via_face_means(const MultiplicityVector& m, FaceRange range = FaceRange::kAtLeastTwo);

/// Order of e_{u(k)} - e_{u(j)} in coker L, where u(k) is the k-th standard
/// basis vector. Throws std::invalid_argument when k == j.
ElementOrder order_of_difference(const MultiplicityVector& m, unsigned k, unsigned j);

/// Order queries against one Laplacian SNF, for sweeping k.
class DifferenceOrders {
 public:
  explicit DifferenceOrders(const MultiplicityVector& m);
  ElementOrder operator()(unsigned k, unsigned j) const;

 private:
  unsigned r_;
  CokernelOrders orders_;
};

/// Sylow-2 of K for r = 2 with multiplicities a, b, c of e_1, e_2, e_1 + e_2.
/// Requires gcd(a, b, c) = 1 and a spanning support; zeros count as even.
ExponentList r2_syl2(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// v_2 of the seven nonzero eigenvalues for r = 3, sorted ascending.
struct ValuationProfile {
  std::array<unsigned, 7> d{};

  unsigned count(unsigned value) const;
  bool all_equal() const { return d.front() == d.back(); }
};

ValuationProfile valuation_profile(const MultiplicityVector& m);

/// Exponent of the top Sylow-2 cyclic factor for r = 3, gcd 1:
/// d7 + 1 unless all d_i agree, then d7.
unsigned r3_top_cyclic_v2(const MultiplicityVector& m);

/// Sylow-2 of K for generic r = 3 with gcd 1.
ExponentList r3_generic_syl2(const MultiplicityVector& m);

/// Exactly four eigenvalues with v_2 = 1, the other three with v_2 >= 2.
/// Requires r = 3 and a generic M.
bool generic_profile_check(const MultiplicityVector& m);

}  // namespace f2sand
