#pragma once

// Reference computations for the tests. Nothing here calls the library's
// SNF, GL, valuation or formula code; inputs and outputs are plain values.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Row = std::vector<mpz_class>;
using Matrix = std::vector<Row>;

inline Matrix laplacian(unsigned r, const std::vector<std::uint64_t>& dense) {
  const std::size_t size = std::size_t{1} << r;
  std::uint64_t n = 0;
  for (auto v : dense) n += v;
  Matrix out(size, Row(size));
  for (std::size_t u = 0; u < size; ++u) {
    for (std::size_t v = 0; v < size; ++v) {
      out[u][v] = u == v ? mpz_class(static_cast<unsigned long>(n)) : -mpz_class(static_cast<unsigned long>(dense[u ^ v]));
    }
  }
  return out;
}

/// Fraction-free Gaussian elimination.
inline mpz_class bareiss_det(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all k x k minors (0 when every minor vanishes).
inline mpz_class minor_gcd(const Matrix& a, std::size_t k) {
  const std::size_t m = a.size(), n = a.front().size();
  mpz_class g = 0;
  for_each_subset(m, k, [&](const std::vector<std::size_t>& rows) {
    if (g == 1) return;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
      if (g == 1) return;
      Matrix sub(k, Row(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rows[i]][cols[j]];
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), bareiss_det(std::move(sub)).get_mpz_t());
    });
  });
  return g;
}

/// Smith diagonal d_k / d_(k-1) from determinantal divisors, zeros last.
inline std::vector<mpz_class> snf_by_minors(const Matrix& a) {
  const std::size_t len = std::min(a.size(), a.front().size());
  std::vector<mpz_class> out(len, 0);
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= len; ++k) {
    const mpz_class d = minor_gcd(a, k);
    if (d == 0) break;
    out[k - 1] = d / prev;
    prev = d;
  }
  return out;
}

/// Rank over Q by fraction-free elimination.
inline std::size_t rank_over_q(Matrix a) {
  const std::size_t m = a.size(), n = a.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t p = rank;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      const mpz_class f = a[i][c], piv = a[rank][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] * piv - a[rank][j] * f;
    }
    ++rank;
  }
  return rank;
}

/// Order of w in coker(A) as |T(coker A)| / |T(coker [A | w])|; nullopt when
/// appending w raises the rank (infinite order).
inline std::optional<mpz_class> order_by_minors(const Matrix& a, const Row& w) {
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(w[i]);
  const std::size_t rank = rank_over_q(a);
  if (rank_over_q(aug) != rank) return std::nullopt;
  if (rank == 0) return mpz_class(1);
  return minor_gcd(a, rank) / minor_gcd(aug, rank);
}

inline unsigned v2_of(const mpz_class& x) { return static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0)); }

/// v_2 of a nonzero rational.
inline long v2_of(const mpq_class& x) {
  return static_cast<long>(v2_of(mpz_class(x.get_num()))) - static_cast<long>(v2_of(mpz_class(x.get_den())));
}

inline mpz_class binomial(unsigned long a, unsigned long b) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

/// sum_{i=0}^{q} C(q, i) / (p + i), exactly.
inline mpq_class binomial_sum(unsigned long p, unsigned long q) {
  mpq_class sum = 0;
  for (unsigned long i = 0; i <= q; ++i) sum += mpq_class(binomial(q, i), p + i);
  sum.canonicalize();
  return sum;
}

/// Every invertible r x r matrix over F_2 as a permutation of F_2^r
/// (perm[u] = image of u), found by testing all 2^(r^2) matrices for bijectivity.
inline std::vector<std::vector<std::uint32_t>> gl_permutations(unsigned r) {
  const std::uint32_t size = 1u << r;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t code = 0; code < (1u << (r * r)); ++code) {
    std::vector<std::uint32_t> perm(size);
    std::vector<bool> hit(size, false);
    bool bijective = true;
    for (std::uint32_t u = 0; u < size && bijective; ++u) {
      std::uint32_t image = 0;
      for (unsigned i = 0; i < r; ++i) {
        const std::uint32_t row = (code >> (i * r)) & (size - 1);
        image |= static_cast<std::uint32_t>(__builtin_parity(row & u)) << i;
      }
      bijective = !hit[image];
      hit[image] = true;
      perm[u] = image;
    }
    if (bijective) out.push_back(std::move(perm));
  }
  return out;
}

/// Lexicographically least (mu_1, ..., mu_{2^r - 1}) over the GL-orbit.
inline std::vector<std::uint64_t> canonical_tuple(unsigned r, const std::vector<std::uint64_t>& dense) {
  std::vector<std::uint64_t> best;
  for (const auto& perm : gl_permutations(r)) {
    std::vector<std::uint64_t> image(dense.size(), 0);
    for (std::size_t u = 0; u < dense.size(); ++u) image[perm[u]] = dense[u];
    std::vector<std::uint64_t> tuple(image.begin() + 1, image.end());
    if (best.empty() || tuple < best) best = tuple;
  }
  return best;
}

/// Integer row echelon form with positive pivots.
class RowLattice {
 public:
  explicit RowLattice(Matrix rows) : rows_(std::move(rows)) { reduce(); }

  bool contains(Row v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      if (v[c] % rows_[i][c] != 0) return false;
      const mpz_class f = v[c] / rows_[i][c];
      for (std::size_t j = c; j < v.size(); ++j) v[j] -= f * rows_[i][j];
    }
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
  }

 private:
  void reduce() {
    Matrix echelon;
    if (rows_.empty()) return;
    const std::size_t n = rows_.front().size();
    Matrix work = rows_;
    for (std::size_t c = 0; c < n; ++c) {
      // Euclid on column c until at most one row is nonzero there.
      while (true) {
        std::size_t best = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
          if (work[i][c] != 0 && (best == work.size() || abs(work[i][c]) < abs(work[best][c]))) best = i;
        }
        if (best == work.size()) break;
        bool others = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
          if (i == best || work[i][c] == 0) continue;
          others = true;
          mpz_class f;
          mpz_fdiv_q(f.get_mpz_t(), work[i][c].get_mpz_t(), work[best][c].get_mpz_t());
          for (std::size_t j = c; j < n; ++j) work[i][j] -= f * work[best][j];
        }
        if (!others) {
          Row pivot = work[best];
          if (pivot[c] < 0) {
            for (auto& x : pivot) x = -x;
          }
          echelon.push_back(std::move(pivot));
          pivots_.push_back(c);
          work.erase(work.begin() + static_cast<long>(best));
          break;
        }
      }
    }
    rows_ = std::move(echelon);
  }

  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace oracle
