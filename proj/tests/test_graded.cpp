#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "psi/graded.hpp"
#include "psi/series.hpp"

using namespace psi;

TEST_CASE("monomial enumeration") {
  auto a4 = build_An(4);
  CHECK(enumerate_monomials(a4, {1, 1, 0, 0}).size() == 4);
  CHECK(enumerate_monomials(a4, {2, 0, 0, 0}).size() == 3);
  CHECK(enumerate_monomials(a4, {0, 0, 0, 0}).size() == 1);
  auto a5 = build_An(5);
  CHECK(enumerate_monomials(a5, {2, 0, 0, 0, 0}).size() == 6);
  for (const auto& a : degree_vectors_up_to(4, 4)) {
    auto ms = enumerate_monomials(a4, a);
    CHECK(ms.size() == monomial_count(*a4.ring, a));
    for (std::size_t k = 1; k < ms.size(); ++k)
      CHECK(a4.ring->order().compare(ms[k - 1], ms[k]) == Cmp::LT);
    for (const auto& m : ms)
      for (int b = 0; b < 4; ++b)
        CHECK(m.multidegree()[static_cast<std::size_t>(b)] == a[static_cast<std::size_t>(b)]);
  }
}

TEST_CASE("degree vector enumeration") {
  auto v = degree_vectors_up_to(3, 2);
  CHECK(v.size() == 10);
  CHECK(v.front() == DegreeVector{0, 0, 0});
  CHECK(unit_vector(3, 2) == DegreeVector{0, 1, 0});
}

TEST_CASE("small graded dimensions") {
  auto a4 = build_An(4);
  auto a5 = build_An(5);
  CHECK(graded_dim(a4, {1, 1, 0, 0}) == 3);
  CHECK(graded_dim(a4, {2, 1, 0, 0}) == 4);
  CHECK(graded_dim(a5, {1, 1, 0, 0, 0}) == 7);
  CHECK(graded_dim(a4, {0, 0, 0, 0}) == 1);
  CHECK(graded_dim(build_An(3), {2, 1, 3}) == 1);
}

TEST_CASE("rank of trivial matrices") {
  DenseMatrix<Rational> zero(3, std::vector<Rational>(4, Rational(0)));
  CHECK(exact_rank(zero) == 0);
  DenseMatrix<Rational> id(4, std::vector<Rational>(4, Rational(0)));
  for (int k = 0; k < 4; ++k)
    id[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
  CHECK(exact_rank(id) == 4);
  CHECK(rank_rational(id) == 4);
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, 2, 7) == 1);
}

TEST_CASE("graded dimension is invariant under relabelling points") {
  for (int n = 4; n <= 5; ++n) {
    auto s = build_An(n);
    for (const auto& a : degree_vectors_up_to(n, 3)) {
      auto rev = a;
      std::reverse(rev.begin(), rev.end());
      auto rot = a;
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      auto d = graded_dim(s, a);
      CAPTURE(n);
      CHECK(graded_dim(s, rev) == d);
      CHECK(graded_dim(s, rot) == d);
    }
  }
}

TEST_CASE("graded dimension does not depend on the pivot scheme") {
  for (int n = 4; n <= 5; ++n) {
    auto cyc = build_An(n, PivotScheme::cyclic(n));
    auto com = build_An(n, PivotScheme::common(n));
    for (const auto& a : degree_vectors_up_to(n, 3))
      CHECK(graded_dim(cyc, a) == graded_dim(com, a));
  }
}

TEST_CASE("rank detail agrees mod p and over Q on small slices") {
  auto s = build_An(5);
  auto d = graded_dim_detail(s, {1, 1, 1, 0, 0});
  CHECK(d.verified_q);
  CHECK_FALSE(d.bad_prime);
  CHECK(d.dim == d.columns - d.rank);
}
