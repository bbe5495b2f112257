#include <doctest.h>

#include <algorithm>
#include <random>

#include "psi/graded.hpp"
#include "psi/groebner.hpp"
#include "psi/series.hpp"

using namespace psi;

namespace {

PPoly random_poly(const RingPtr& R, std::mt19937_64& rng, int max_deg) {
  std::vector<Term<Zp>> t;
  int terms = 1 + static_cast<int>(rng() % 6);
  for (int k = 0; k < terms; ++k) {
    std::vector<Exponent> e(R->num_vars(), 0);
    int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int s = 0; s < d; ++s)
      ++e[rng() % e.size()];
    t.push_back({R->monomial(std::move(e)), Zp(static_cast<std::int64_t>(rng() % 1000) + 1, kDefaultPrime)});
  }
  return PPoly(R, std::move(t));
}

}  // namespace

TEST_CASE("principal ideals") {
  auto s = build_Bnm(2, 2);
  auto gb = buchberger(relations_over(s, RationalField{}));
  REQUIRE(gb.gens.size() == 1);
  CHECK(is_one(gb.gens[0].leading_coeff()));
  auto scaled = s.relations[0].scaled(make_rational(-3, 2));
  auto g2 = buchberger(std::vector<QPoly>{scaled});
  REQUIRE(g2.gens.size() == 1);
  CHECK(g2.gens[0] == scaled.monic());
  CHECK(krull_dimension(gb) == 3);
}

TEST_CASE("empty generator list") {
  CHECK_THROWS_AS(buchberger(std::vector<QPoly>{}), UsageError);
}

TEST_CASE("normal forms") {
  auto s = build_An(4);
  PrimeField f;
  auto gb = buchberger(relations_over(s, f));
  for (const auto& r : relations_over(s, f))
    CHECK(normal_form(r, gb).is_zero());
  auto one = PPoly::constant(s.ring, f.one());
  CHECK(normal_form(one, gb) == one);
  for (const auto& m : enumerate_monomials(s, unit_vector(4, 1))) {
    PPoly p(s.ring, {{m, f.one()}});
    CHECK(normal_form(p, gb) == p);
  }
  CHECK_FALSE(gb.contains_unit());
}

TEST_CASE("Krull dimensions") {
  CHECK(monomial_ideal_dimension({}, 3) == 3);
  PrimeField f;
  CHECK(krull_dimension(buchberger(relations_over(build_An(4), f))) == 5);
  CHECK(krull_dimension(buchberger(relations_over(build_An(5), f))) == 7);
  CHECK(krull_dimension(buchberger(relations_over(build_Bnm(2, 2), f))) == 3);
}

TEST_CASE("standard monomial counts") {
  auto s = build_An(4);
  auto gb = buchberger(relations_over(s, PrimeField{}));
  CHECK(standard_monomial_count(gb, {1, 1, 0, 0}) == 3);
  CHECK(standard_monomial_count(gb, unit_vector(4, 1)) == 2);
  auto lee = lee_series(4, SeriesBound::total(5));
  for (const auto& a : lee.keys())
    CHECK(static_cast<std::int64_t>(standard_monomial_count(gb, a)) == lee.coefficient(a));

  auto s5 = build_An(5);
  auto gb5 = buchberger(relations_over(s5, PrimeField{}));
  DegreeVector a{1, 1, 1, 0, 0};
  auto expect = lee_coefficient(2, a);
  CHECK(static_cast<std::int64_t>(standard_monomial_count(gb5, a)) == expect);
  CHECK(static_cast<std::int64_t>(graded_dim(s5, a)) == expect);
}

TEST_CASE("rational and modular bases have the same leading monomials") {
  auto s = build_An(5);
  auto q = buchberger(relations_over(s, RationalField{}));
  auto p = buchberger(relations_over(s, PrimeField{}));
  CHECK(q.leading_monomials() == p.leading_monomials());
}

TEST_CASE("reduction is confluent") {
  auto s = build_An(4);
  auto gb = buchberger(relations_over(s, PrimeField{}));
  std::mt19937_64 rng(5);
  std::vector<PPoly> reducers = gb.gens;
  for (int t = 0; t < 200; ++t) {
    auto p = random_poly(s.ring, rng, 4);
    auto expect = normal_form(p, gb);
    std::shuffle(reducers.begin(), reducers.end(), rng);
    CHECK(normal_form_ordered<Zp>(p, reducers) == expect);
  }
}

TEST_CASE("degree caps") {
  auto s = build_An(5);
  PrimeField f;
  auto full = buchberger(relations_over(s, f));
  auto c2 = buchberger(relations_over(s, f), 2);
  auto c3 = buchberger(relations_over(s, f), 3);
  for (const auto& a : degree_vectors_up_to(5, 2)) {
    CHECK(standard_monomial_count(c2, a) == standard_monomial_count(c3, a));
    CHECK(standard_monomial_count(c2, a) == standard_monomial_count(full, a));
  }
  for (const auto& a : degree_vectors_up_to(5, 3))
    CHECK(standard_monomial_count(c3, a) == standard_monomial_count(full, a));

  std::mt19937_64 rng(9);
  auto p = random_poly(s.ring, rng, 4);
  while (p.total_degree() <= 2)
    p = random_poly(s.ring, rng, 4);
  CHECK_THROWS_AS(normal_form(p, c2), UsageError);
  CHECK_THROWS_AS(krull_dimension(c2), UsageError);
  CHECK_THROWS_AS(standard_monomial_count(c2, {1, 1, 1, 0, 0}), UsageError);
  CHECK_THROWS_AS(buchberger(relations_over(s, f), 1), UsageError);
}

TEST_CASE("reduced basis shape") {
  auto gb = buchberger(relations_over(build_An(5), PrimeField{}));
  CHECK(gb.gens.size() == 27);
  auto lms = gb.leading_monomials();
  for (std::size_t a = 0; a < lms.size(); ++a) {
    CHECK(is_one(gb.gens[a].leading_coeff()));
    for (std::size_t b = 0; b < lms.size(); ++b)
      if (a != b)
        CHECK_FALSE(lms[a].divides(lms[b]));
  }
}
