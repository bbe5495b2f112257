#include <doctest.h>

#include "psi/groebner.hpp"
#include "psi/presentation.hpp"
#include "psi/series.hpp"

using namespace psi;

TEST_CASE("A_n sizes") {
  CHECK(build_An(3).num_vars() == 3);
  CHECK(build_An(3).relations.empty());
  CHECK(build_An(4).num_vars() == 8);
  CHECK(build_An(4).relations.size() == 6);
  CHECK(build_An(5).num_vars() == 15);
  CHECK(build_An(5).relations.size() == 20);
  for (int n = 3; n <= 8; ++n) {
    auto s = build_An(n);
    CHECK(s.num_vars() == static_cast<std::size_t>(n * (n - 2)));
    CHECK(s.relations.size() == static_cast<std::size_t>(binomial_i64(n, 2) * (n - 3)));
    for (int i = 1; i <= n; ++i)
      CHECK(s.ring->block_size(i - 1) == n - 2);
  }
}

TEST_CASE("A_n relations are bilinear of degree e_i + e_j") {
  for (int n = 4; n <= 7; ++n)
    for (auto pivot : {PivotScheme::cyclic(n), PivotScheme::common(n)}) {
      auto s = build_An(n, pivot);
      auto audit = relation_degree_audit(s);
      CHECK(audit.size() == static_cast<std::size_t>(binomial_i64(n, 2)));
      for (const auto& [pair, count] : audit)
        CHECK(count == n - 3);
    }
}

TEST_CASE("B_{n,m} sizes") {
  struct Row {
    int n, m;
    std::size_t vars, rels;
  };
  for (auto r : {Row{2, 2, 4, 1}, Row{3, 1, 6, 3}, Row{3, 2, 9, 6}, Row{4, 1, 12, 12}, Row{4, 2, 16, 18}}) {
    auto s = build_Bnm(r.n, r.m);
    CAPTURE(s.label());
    CHECK(s.num_vars() == r.vars);
    CHECK(s.relations.size() == r.rels);
    for (const auto& [pair, count] : relation_degree_audit(s))
      CHECK(count == (r.n - 2) + (r.m - 1));
  }
}

TEST_CASE("conifold relation") {
  auto s = build_Bnm(2, 2);
  REQUIRE(s.relations.size() == 1);
  CHECK(s.relations[0].size() == 3);
  CHECK(s.relations[0].to_string() == "-a[2,1]*phi[1,1] - a[1,2]*phi[1,2] + phi[1,1]*phi[1,2]");
}

TEST_CASE("m = 0 gives A_n") {
  auto b = build_Bnm(5, 0);
  CHECK(b.kind == AlgebraKind::An);
  CHECK(b.relations.size() == 20);
}

TEST_CASE("invalid sizes") {
  CHECK_THROWS_AS(build_An(2), UsageError);
  CHECK_THROWS_AS(build_An(0), UsageError);
  CHECK_THROWS_AS(build_Bnm(1, 2), UsageError);
  CHECK_THROWS_AS(build_An(4, PivotScheme::custom({1, 1, 1, 1})), UsageError);
  CHECK_THROWS_AS(build_An(4, PivotScheme::cyclic(5)), UsageError);
  CHECK_THROWS(parse_algebra_kind("cn"));
}

TEST_CASE("every cross difference lies in the ideal") {
  for (int n = 4; n <= 5; ++n) {
    auto s = build_An(n);
    PrimeField f;
    auto gb = buchberger(relations_over(s, f));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (const auto& r : spanning_relations(s, i, j))
          CHECK(normal_form(to_prime(r, f.modulus()), gb).is_zero());
  }
}

TEST_CASE("tensor relation space") {
  CHECK(tensor_relation_space(3).dim() == 3);
  CHECK(tensor_relation_space(4).dim() == 34);
  CHECK(tensor_relation_space(5).dim() == 125);
  for (int n = 3; n <= 6; ++n) {
    auto r = tensor_relation_space(n);
    std::size_t d = static_cast<std::size_t>(n * (n - 2));
    CHECK(r.dim_v == d);
    CHECK(r.commutators.size() == d * (d - 1) / 2);
    CHECK(symmetric_part_rank(r) == static_cast<std::size_t>(binomial_i64(n, 2) * (n - 3)));
  }
}
