#include <doctest.h>

#include "f2sand/cayley.hpp"
#include "oracles.hpp"

using namespace f2sand;

namespace {

std::vector<std::uint64_t> dense_of(const MultiplicityVector& m) { return {m.dense().begin(), m.dense().end()}; }

oracle::Matrix principal_minor(oracle::Matrix a) {
  a.erase(a.begin());
  for (auto& row : a) row.erase(row.begin());
  return a;
}

}  // namespace

TEST_CASE("multiplicity vector factories") {
  const auto m = MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{1, 2, 0});
  CHECK(m.total() == 3);
  CHECK(m.at(1) == 1);
  CHECK(m.at(2) == 2);
  CHECK(m.gcd() == 1);
  CHECK(m.even_count() == 2);
  CHECK(m.describe() == "r=2 {01:1,10:2}");

  const std::vector<BitVector> cols = {BitVector::parse("01"), BitVector::parse("10"), BitVector::parse("10")};
  CHECK(MultiplicityVector::from_columns(cols) == m);

  CHECK_THROWS_AS(MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(MultiplicityVector::from_tuple(3, std::vector<std::uint64_t>{1, 1, 1, 0, 0, 0, 0}),
                       "support does not span F_2^r", std::invalid_argument);
  CHECK_THROWS_AS(MultiplicityVector::from_dense(2, {1, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("r = 1 is the multigraph on two vertices") {
  const auto m = MultiplicityVector::from_tuple(1, std::vector<std::uint64_t>{3});
  CHECK(spectrum(m).multiset() == std::vector<std::uint64_t>{0, 6});
  CHECK(spanning_tree_count(m) == 3);
}

TEST_CASE("laplacian matches the adjacency definition") {
  for (const auto& m : {hypercube(3), complete_generators(3),
                        MultiplicityVector::from_tuple(3, std::vector<std::uint64_t>{2, 2, 1, 2, 1, 1, 2})}) {
    const auto l = laplacian(m);
    const auto ref = oracle::laplacian(m.dim(), dense_of(m));
    REQUIRE(l.rows() == ref.size());
    CHECK(l.is_symmetric());
    for (std::size_t i = 0; i < l.rows(); ++i) {
      for (std::size_t j = 0; j < l.cols(); ++j) REQUIRE(l(i, j) == ref[i][j]);
    }
  }
}

TEST_CASE("hypercube spectrum is twice the weight") {
  CHECK(spectrum(hypercube(3)).multiset() == std::vector<std::uint64_t>{0, 2, 2, 2, 4, 4, 4, 6});
  const auto s = spectrum(hypercube(4));
  for (std::uint32_t u = 0; u < 16; ++u) CHECK(s.at(u) == 2u * static_cast<unsigned>(std::popcount(u)));
  CHECK(spectrum(complete_generators(3)).multiset() == std::vector<std::uint64_t>{0, 8, 8, 8, 8, 8, 8, 8});
  CHECK(spectrum(hypercube(3)).lcm_nonzero() == 12);
}

TEST_CASE("spectrum matches the characters applied to the laplacian") {
  const auto m = MultiplicityVector::from_tuple(3, std::vector<std::uint64_t>{1, 0, 2, 3, 0, 1, 1});
  const auto l = laplacian(m);
  const auto s = spectrum(m);
  for (std::uint32_t u = 0; u < 8; ++u) {
    std::vector<mpz_class> f(8);
    for (std::uint32_t w = 0; w < 8; ++w) f[w] = dot_bits(u, w) ? -1 : 1;
    const auto lf = l * std::span<const mpz_class>(f);
    for (std::uint32_t w = 0; w < 8; ++w) REQUIRE(lf[w] == f[w] * mpz_class(static_cast<unsigned long>(s.at(u))));
  }
}

TEST_CASE("genericity and parity signature") {
  CHECK(is_generic(hypercube(3)));
  CHECK(is_generic(hypercube(2)));
  CHECK_FALSE(is_generic(complete_generators(3)));
  const auto m = MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{1, 1, 1});
  CHECK_FALSE(is_generic(m));
  CHECK(parity_signature(MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{3, 2, 0})) ==
        std::vector<std::uint8_t>{1, 0, 0});
}

TEST_CASE("spanning tree counts") {
  CHECK(spanning_tree_count(hypercube(2)) == 4);
  CHECK(spanning_tree_count(hypercube(3)) == 384);
  CHECK(spanning_tree_count(complete_generators(3)) == 262144);
}

TEST_CASE("spanning tree count equals a principal cofactor") {
  for (const auto& m : {hypercube(3), complete_generators(2),
                        MultiplicityVector::from_tuple(3, std::vector<std::uint64_t>{1, 0, 2, 3, 0, 1, 1}),
                        MultiplicityVector::from_tuple(2, std::vector<std::uint64_t>{5, 3, 7})}) {
    CHECK(spanning_tree_count(m) == oracle::bareiss_det(principal_minor(oracle::laplacian(m.dim(), dense_of(m)))));
  }
}

TEST_CASE("scale") {
  const auto m = scale(hypercube(2), 3);
  CHECK(m.tuple() == std::vector<std::uint64_t>{3, 3, 0});
  CHECK(spectrum(m).multiset() == std::vector<std::uint64_t>{0, 6, 6, 12});
  CHECK_THROWS_AS(scale(m, 0), std::invalid_argument);
}
