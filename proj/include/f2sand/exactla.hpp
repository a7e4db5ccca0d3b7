#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "f2sand/cayley.hpp"
#include "f2sand/integer_matrix.hpp"

namespace f2sand {

/// Smith normal form of an m x n matrix.
///
/// `diag` has min(m, n) entries s_1 | s_2 | ... with every zero after the
/// nonzero entries. When requested, `left` (m x m) and `right` (n x n) are
/// unimodular with left * A * right equal to the diagonal matrix.
struct SNFResult {
  std::vector<mpz_class> diag;
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;

  std::size_t rank() const;
};

SNFResult smith_normal_form(const IntegerMatrix& a, bool want_witnesses = false);

/// Exponents e of the factors Z/p^e, ascending.
using ExponentList = std::vector<unsigned>;

/// A finite abelian group as invariant factors c_d | ... | c_1, stored in
/// increasing order, all > 1. The trivial group has no factors.
class GroupDecomposition {
 public:
  GroupDecomposition() = default;

  /// Accepts any list whose entries > 1 form a divisibility chain after
  /// sorting; entries equal to 1 are dropped. Throws std::invalid_argument
  /// when the chain is broken or an entry is not positive.
  static GroupDecomposition from_invariant_factors(std::vector<mpz_class> factors);
  /// Direct sum of arbitrary cyclic groups Z/c_i, regrouped into invariant factors.
  static GroupDecomposition from_cyclic_orders(std::span<const mpz_class> orders);
  static GroupDecomposition from_sylow(const std::map<unsigned long, ExponentList>& sylow);

  const std::vector<mpz_class>& invariant_factors() const noexcept { return factors_; }
  mpz_class order() const;
  /// Largest invariant factor c_1; 1 for the trivial group.
  mpz_class largest() const;
  /// k-th largest factor (k = 1 is c_1); 1 past the end.
  mpz_class kth_largest(std::size_t k) const;
  std::size_t even_factor_count() const;

  std::map<unsigned long, ExponentList> sylow() const;
  ExponentList sylow(unsigned long p) const;

  bool operator==(const GroupDecomposition&) const = default;

 private:
  std::vector<mpz_class> factors_;
};

/// Prime factorization by trial division; primes here never exceed 2n.
std::map<unsigned long, unsigned> factorize(const mpz_class& value);

struct Cokernel {
  std::size_t free_rank = 0;
  GroupDecomposition torsion;
};

Cokernel cokernel(const IntegerMatrix& a);
Cokernel cokernel_from_snf(const SNFResult& snf, std::size_t rows);

/// Torsion of coker L(G). Throws std::domain_error if the free rank is not 1.
GroupDecomposition sandpile_group(const MultiplicityVector& m);
/// Same, from an already computed SNF diagonal of the Laplacian.
GroupDecomposition sandpile_group_from_snf(const MultiplicityVector& m, const SNFResult& snf);

/// Sylow-p exponents of the direct sum of Z/lambda_u over u != 0, p odd prime.
ExponentList sylow_from_eigenvalues(const MultiplicityVector& m, unsigned long p);

std::size_t rank_mod2(const IntegerMatrix& a);

/// Number of even invariant factors, via (2^r - 1) - rank over F_2 of L.
std::size_t d_of_M(const MultiplicityVector& m);

/// Additive order of a cokernel element; std::nullopt means infinite order.
using ElementOrder = std::optional<mpz_class>;

/// Computes one SNF with witnesses and answers order queries against it.
class CokernelOrders {
 public:
  explicit CokernelOrders(const IntegerMatrix& a);

  /// Least C >= 1 with C * w in the image of A.
  ElementOrder order(std::span<const mpz_class> w) const;
  const SNFResult& snf() const noexcept { return snf_; }

 private:
  SNFResult snf_;
};

ElementOrder element_order_in_cokernel(const IntegerMatrix& a, std::span<const mpz_class> w);

}  // namespace f2sand
