#include "f2sand/exactla.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace f2sand {

std::size_t SNFResult::rank() const {
  return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](const mpz_class& s) { return s != 0; }));
}

namespace {

// Elimination state for one SNF computation. Row operations are mirrored
// into `left`, column operations into `right`.
class SmithReducer {
 public:
  SmithReducer(const IntegerMatrix& a, bool witnesses) : a_(a), m_(a.rows()), n_(a.cols()) {
    if (witnesses) {
      left_.emplace(IntegerMatrix::identity(m_));
      right_.emplace(IntegerMatrix::identity(n_));
    }
  }

  SNFResult run() {
    const std::size_t k = std::min(m_, n_);
    SNFResult out;
    out.diag.assign(k, 0);
    for (std::size_t t = 0; t < k; ++t) {
      if (!move_min_to(t, t, t)) break;
      reduce_at(t);
      if (a_(t, t) < 0) negate_row(t);
      out.diag[t] = a_(t, t);
    }
    out.left = std::move(left_);
    out.right = std::move(right_);
    return out;
  }

 private:
  // Moves the entry of least nonzero absolute value in rows >= row_from,
  // cols >= col_from to (t, t). False when that block is zero.
  bool move_min_to(std::size_t t, std::size_t row_from, std::size_t col_from) {
    std::size_t bi = m_, bj = n_;
    bool unit = false;
    for (std::size_t i = row_from; i < m_ && !unit; ++i) {
      for (std::size_t j = col_from; j < n_; ++j) {
        const mpz_class& v = a_(i, j);
        if (v == 0) continue;
        if (bi == m_ || mpz_cmpabs(v.get_mpz_t(), a_(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
          unit = v == 1 || v == -1;
          if (unit) break;
        }
      }
    }
    if (bi == m_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m_; ++i) {
        if (a_(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        add_row_multiple(i, t, q);
        if (a_(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (a_(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        add_col_multiple(j, t, q);
        if (a_(t, j) != 0) dirty = true;
      }
      if (dirty) {
        move_min_in_cross(t);
        continue;
      }
      // Row and column are clear; the pivot must divide the remaining block.
      std::size_t bad = m_;
      for (std::size_t i = t + 1; i < m_ && bad == m_; ++i) {
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m_) return;
      add_row_multiple(t, bad, -1);
    }
  }

  // After a sweep leaves remainders in row t or column t, bring the smallest
  // entry of that cross to the pivot.
  void move_min_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (a_(i, t) != 0 && mpz_cmpabs(a_(i, t).get_mpz_t(), a_(bi, bj).get_mpz_t()) < 0) {
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (a_(t, j) != 0 && mpz_cmpabs(a_(t, j).get_mpz_t(), a_(bi, bj).get_mpz_t()) < 0) {
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  // row_dst -= q * row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    submul_rows(a_, dst, src, q);
    if (left_) submul_rows(*left_, dst, src, q);
  }

  // col_dst -= q * col_src
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& q) {
    if (q == 0) return;
    submul_cols(a_, dst, src, q);
    if (right_) submul_cols(*right_, dst, src, q);
  }

  static void submul_rows(IntegerMatrix& x, std::size_t dst, std::size_t src, const mpz_class& q) {
    auto d = x.row(dst);
    auto s = x.row(src);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (s[j] != 0) mpz_submul(d[j].get_mpz_t(), q.get_mpz_t(), s[j].get_mpz_t());
    }
  }

  static void submul_cols(IntegerMatrix& x, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      if (x(i, src) != 0) mpz_submul(x(i, dst).get_mpz_t(), q.get_mpz_t(), x(i, src).get_mpz_t());
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < n_; ++j) mpz_swap(a_(i, j).get_mpz_t(), a_(k, j).get_mpz_t());
    if (left_) {
      for (std::size_t j = 0; j < m_; ++j) mpz_swap((*left_)(i, j).get_mpz_t(), (*left_)(k, j).get_mpz_t());
    }
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < m_; ++i) mpz_swap(a_(i, j).get_mpz_t(), a_(i, k).get_mpz_t());
    if (right_) {
      for (std::size_t i = 0; i < n_; ++i) mpz_swap((*right_)(i, j).get_mpz_t(), (*right_)(i, k).get_mpz_t());
    }
  }

  void negate_row(std::size_t i) {
    for (auto& v : a_.row(i)) v = -v;
    if (left_) {
      for (auto& v : left_->row(i)) v = -v;
    }
  }

  IntegerMatrix a_;
  std::size_t m_, n_;
  std::optional<IntegerMatrix> left_, right_;
};

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& a, bool want_witnesses) {
  return SmithReducer(a, want_witnesses).run();
}

// ---------------------------------------------------------------------------
// GroupDecomposition

std::map<unsigned long, unsigned> factorize(const mpz_class& value) {
  if (value <= 0) throw std::invalid_argument("factorize needs a positive integer");
  std::map<unsigned long, unsigned> out;
  mpz_class rest = value;
  for (unsigned long p = 2; rest > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > rest || (p > 1000 && mpz_probab_prime_p(rest.get_mpz_t(), 30) != 0)) {
      if (!rest.fits_ulong_p()) throw std::domain_error("prime factor too large: " + rest.get_str());
      ++out[rest.get_ui()];
      break;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++out[p];
    }
  }
  return out;
}

GroupDecomposition GroupDecomposition::from_invariant_factors(std::vector<mpz_class> factors) {
  for (const auto& f : factors) {
    if (f <= 0) throw std::invalid_argument("invariant factors must be positive, got " + f.get_str());
  }
  std::erase_if(factors, [](const mpz_class& f) { return f == 1; });
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (!mpz_divisible_p(factors[i].get_mpz_t(), factors[i - 1].get_mpz_t())) {
      throw std::invalid_argument("invariant factors do not form a divisibility chain: " + factors[i - 1].get_str() +
                                  " does not divide " + factors[i].get_str());
    }
  }
  GroupDecomposition out;
  out.factors_ = std::move(factors);
  return out;
}

GroupDecomposition GroupDecomposition::from_sylow(const std::map<unsigned long, ExponentList>& sylow) {
  std::size_t len = 0;
  for (const auto& [p, exps] : sylow) len = std::max(len, exps.size());
  // k-th largest factor collects the k-th largest exponent of every prime.
  std::vector<mpz_class> factors(len, 1);
  for (const auto& [p, exps] : sylow) {
    ExponentList sorted = exps;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      mpz_class pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, sorted[k]);
      factors[k] *= pk;
    }
  }
  return from_invariant_factors(std::move(factors));
}

GroupDecomposition GroupDecomposition::from_cyclic_orders(std::span<const mpz_class> orders) {
  std::map<unsigned long, ExponentList> sylow;
  for (const auto& c : orders) {
    if (c <= 0) throw std::invalid_argument("cyclic orders must be positive");
    for (const auto& [p, e] : factorize(c)) sylow[p].push_back(e);
  }
  return from_sylow(sylow);
}

mpz_class GroupDecomposition::order() const {
  mpz_class out = 1;
  for (const auto& f : factors_) out *= f;
  return out;
}

mpz_class GroupDecomposition::largest() const { return factors_.empty() ? mpz_class(1) : factors_.back(); }

mpz_class GroupDecomposition::kth_largest(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("kth_largest is 1-based");
  return k <= factors_.size() ? factors_[factors_.size() - k] : mpz_class(1);
}

std::size_t GroupDecomposition::even_factor_count() const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [](const mpz_class& f) { return mpz_even_p(f.get_mpz_t()); }));
}

std::map<unsigned long, ExponentList> GroupDecomposition::sylow() const {
  std::map<unsigned long, ExponentList> out;
  for (const auto& f : factors_) {
    for (const auto& [p, e] : factorize(f)) out[p].push_back(e);
  }
  for (auto& [p, exps] : out) std::sort(exps.begin(), exps.end());
  return out;
}

ExponentList GroupDecomposition::sylow(unsigned long p) const {
  ExponentList out;
  for (const auto& f : factors_) {
    unsigned e = static_cast<unsigned>(mpz_remove(mpz_class().get_mpz_t(), f.get_mpz_t(), mpz_class(p).get_mpz_t()));
    if (e > 0) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cokernels

Cokernel cokernel_from_snf(const SNFResult& snf, std::size_t rows) {
  Cokernel out;
  out.free_rank = rows - snf.rank();
  std::vector<mpz_class> nonzero;
  for (const auto& s : snf.diag) {
    if (s != 0) nonzero.push_back(s);
  }
  out.torsion = GroupDecomposition::from_invariant_factors(std::move(nonzero));
  return out;
}

Cokernel cokernel(const IntegerMatrix& a) { return cokernel_from_snf(smith_normal_form(a), a.rows()); }

GroupDecomposition sandpile_group_from_snf(const MultiplicityVector& m, const SNFResult& snf) {
  auto c = cokernel_from_snf(snf, m.vertex_count());
  if (c.free_rank != 1) {
    throw std::domain_error("Laplacian cokernel has free rank " + std::to_string(c.free_rank) + ", expected 1");
  }
  return c.torsion;
}

GroupDecomposition sandpile_group(const MultiplicityVector& m) {
  return sandpile_group_from_snf(m, smith_normal_form(laplacian(m)));
}

ExponentList sylow_from_eigenvalues(const MultiplicityVector& m, unsigned long p) {
  if (p < 3 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) {
    throw std::invalid_argument("sylow_from_eigenvalues needs an odd prime");
  }
  ExponentList out;
  const auto spec = spectrum(m);
  for (auto lambda : spec.values()) {
    if (lambda == 0) continue;
    unsigned e = 0;
    for (auto v = lambda; v % p == 0; v /= p) ++e;
    if (e > 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t rank_mod2(const IntegerMatrix& a) {
  const std::size_t words = (a.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(a.rows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (mpz_odd_p(a(i, j).get_mpz_t())) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  std::size_t rank = 0;
  for (std::size_t j = 0; j < a.cols() && rank < rows.size(); ++j) {
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][j / 64] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i][j / 64] & mask)) {
        for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t d_of_M(const MultiplicityVector& m) { return m.vertex_count() - 1 - rank_mod2(laplacian(m)); }

CokernelOrders::CokernelOrders(const IntegerMatrix& a) : snf_(smith_normal_form(a, true)) {}

ElementOrder CokernelOrders::order(std::span<const mpz_class> w) const {
  const auto& u = *snf_.left;
  if (w.size() != u.cols()) throw std::invalid_argument("element has the wrong length");
  const auto y = u * w;
  mpz_class out = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    const bool torsion_slot = i < snf_.diag.size() && snf_.diag[i] != 0;
    if (!torsion_slot) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), snf_.diag[i].get_mpz_t(), y[i].get_mpz_t());
    mpz_class part = snf_.diag[i] / g;
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), part.get_mpz_t());
  }
  return out;
}

ElementOrder element_order_in_cokernel(const IntegerMatrix& a, std::span<const mpz_class> w) {
  return CokernelOrders(a).order(w);
}

}  // namespace f2sand
