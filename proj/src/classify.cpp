#include "f2sand/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "f2sand/valuation.hpp"

namespace f2sand {

unsigned FaceCondition::size() const noexcept { return static_cast<unsigned>(std::popcount(coords)); }

std::vector<FaceCondition> face_conditions(unsigned r, unsigned min_size) {
  check_dimension(r);
  std::vector<FaceCondition> out;
  const std::uint32_t full = std::uint32_t{1} << r;
  for (std::uint32_t s = 1; s < full; ++s) {
    if (static_cast<unsigned>(std::popcount(s)) < min_size) continue;
    // Enumerate the nonzero submasks of s as patterns.
    for (std::uint32_t d = s; d != 0; d = (d - 1) & s) out.push_back({s, d});
  }
  return out;
}

namespace {

void require_r_at_least_two(const MultiplicityVector& m) {
  if (m.dim() < 2) throw std::invalid_argument("this formula needs r >= 2");
}

// Reciprocal eigenvalues 1/lambda_u for u != 0.
std::vector<mpq_class> reciprocal_spectrum(const MultiplicityVector& m) {
  const auto spec = spectrum(m);
  std::vector<mpq_class> out(m.vertex_count());
  for (std::uint32_t u = 1; u < m.vertex_count(); ++u) {
    out[u] = mpq_class(1, static_cast<unsigned long>(spec.at(u)));
  }
  return out;
}

// Least C with C * x / 2^shift integral, folded into acc by lcm.
void clear_denominator(mpz_class& acc, const mpq_class& x, unsigned shift) {
  mpq_class scaled = x;
  mpq_div_2exp(scaled.get_mpq_t(), x.get_mpq_t(), shift);
  mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), scaled.get_den().get_mpz_t());
}

}  // namespace

mpz_class monomial_order(const MultiplicityVector& m, unsigned j) {
  require_r_at_least_two(m);
  if (j < 1 || j > m.dim()) throw std::invalid_argument("coordinate out of range");
  const auto inv = reciprocal_spectrum(m);
  const std::uint32_t size = m.vertex_count();
  const std::uint32_t jbit = std::uint32_t{1} << (j - 1);
  mpz_class c = 1;
  for (std::uint32_t v = 1; v < size; ++v) {
    mpq_class sum = 0;
    for (std::uint32_t u = 1; u < size; ++u) {
      if ((u & jbit) && dot_bits(u, v)) sum += inv[u];
    }
    clear_denominator(c, sum, m.dim() - 2);
  }
  return c;
}

mpz_class c1_via_monomial_orders(const MultiplicityVector& m) {
  mpz_class best = 1;
  for (unsigned j = 1; j <= m.dim(); ++j) best = std::max(best, monomial_order(m, j));
  return best;
}

mpz_class c1_via_monomial_lcm(const MultiplicityVector& m) {
  mpz_class out = 1;
  for (unsigned j = 1; j <= m.dim(); ++j) {
    const auto c = monomial_order(m, j);
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), c.get_mpz_t());
  }
  return out;
}

mpz_class c1_via_face_means(const MultiplicityVector& m, FaceRange range) {
  require_r_at_least_two(m);
  const auto inv = reciprocal_spectrum(m);
  const unsigned r = m.dim();
  mpz_class c = 1;
  for (const auto& face : face_conditions(r, range == FaceRange::kAtLeastTwo ? 2 : 1)) {
    mpq_class sum = 0;
    for (std::uint32_t u = 1; u < m.vertex_count(); ++u) {
      if (face.contains(u)) sum += inv[u];
    }
    clear_denominator(c, sum, r - face.size());
  }
  return c;
}

DifferenceOrders::DifferenceOrders(const MultiplicityVector& m) : r_(m.dim()), orders_(laplacian(m)) {}

ElementOrder DifferenceOrders::operator()(unsigned k, unsigned j) const {
  if (k == j) throw std::invalid_argument("order_of_difference needs k != j");
  if (k < 1 || k > r_ || j < 1 || j > r_) throw std::invalid_argument("coordinate out of range");
  std::vector<mpz_class> w(std::size_t{1} << r_);
  w[std::size_t{1} << (k - 1)] = 1;
  w[std::size_t{1} << (j - 1)] = -1;
  return orders_.order(w);
}

ElementOrder order_of_difference(const MultiplicityVector& m, unsigned k, unsigned j) {
  return DifferenceOrders(m)(k, j);
}

ExponentList r2_syl2(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (std::gcd(std::gcd(a, b), c) != 1) throw std::invalid_argument("r2_syl2 needs gcd(a, b, c) = 1");
  if ((a == 0) + (b == 0) + (c == 0) > 1) throw std::invalid_argument("support does not span F_2^2");
  const std::uint64_t sums[] = {a + b, b + c, a + c};
  const auto even = std::count_if(std::begin(sums), std::end(sums), [](auto s) { return s % 2 == 0; });
  if (even == 1) {
    const auto s = *std::find_if(std::begin(sums), std::end(sums), [](auto x) { return x % 2 == 0; });
    return {v2_finite(s) + 1};
  }
  // All three odd.
  unsigned f = 0;
  for (auto s : sums) f = std::max(f, v2_finite(s) + 1);
  const unsigned k = 1 + v2_finite(a + b) + v2_finite(b + c) + v2_finite(a + c);
  ExponentList out{k - f, f};
  std::erase(out, 0u);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned ValuationProfile::count(unsigned value) const {
  return static_cast<unsigned>(std::count(d.begin(), d.end(), value));
}

ValuationProfile valuation_profile(const MultiplicityVector& m) {
  if (m.dim() != 3) throw std::invalid_argument("valuation profile needs r = 3");
  const auto spec = spectrum(m);
  ValuationProfile out;
  for (std::uint32_t u = 1; u < 8; ++u) out.d[u - 1] = v2_finite(spec.at(u));
  std::sort(out.d.begin(), out.d.end());
  return out;
}

namespace {

void require_r3_coprime(const MultiplicityVector& m) {
  if (m.dim() != 3) throw std::invalid_argument("this formula needs r = 3");
  if (m.gcd() != 1) throw std::invalid_argument("this formula needs coprime multiplicities");
}

}  // namespace

unsigned r3_top_cyclic_v2(const MultiplicityVector& m) {
  require_r3_coprime(m);
  const auto p = valuation_profile(m);
  return p.all_equal() ? p.d[6] : p.d[6] + 1;
}

ExponentList r3_generic_syl2(const MultiplicityVector& m) {
  require_r3_coprime(m);
  if (!is_generic(m)) throw std::invalid_argument("r3_generic_syl2 needs a generic M");
  const auto& d = valuation_profile(m).d;
  ExponentList out = d[5] == d[6] ? ExponentList{d[4] - 1, d[6] + 1, d[6] + 1} : ExponentList{d[4], d[5], d[6] + 1};
  std::erase(out, 0u);
  return out;
}

bool generic_profile_check(const MultiplicityVector& m) {
  if (m.dim() != 3) throw std::invalid_argument("generic_profile_check needs r = 3");
  if (!is_generic(m)) throw std::invalid_argument("generic_profile_check needs a generic M");
  const auto p = valuation_profile(m);
  return p.count(1) == 4 && p.d[4] >= 2;
}

}  // namespace f2sand
