#include <doctest.h>

#include "psi/graded.hpp"
#include "psi/series.hpp"

using namespace psi;

TEST_CASE("Lee series anchors") {
  auto s3 = lee_series(3, SeriesBound::total(6));
  for (const auto& a : s3.keys())
    CHECK(s3.coefficient(a) == 1);
  auto s5 = lee_series(5, SeriesBound::total(3));
  CHECK(s5.coefficient({1, 1, 0, 0, 0}) == 7);
  CHECK(s5.coefficient({1, 0, 0, 0, 0}) == 3);
  auto s4 = lee_series(4, SeriesBound::total(3));
  CHECK(s4.coefficient({2, 0, 0, 0}) == 3);
  CHECK(s4.coefficient({0, 0, 0, 0}) == 1);
  for (int n = 3; n <= 8; ++n) {
    auto s = lee_series(n, SeriesBound::total(2));
    CHECK(s.coefficient(unit_vector(n, 1)) == n - 2);
    auto eij = unit_vector(n, 1);
    eij[1] = 1;
    CHECK(s.coefficient(eij) == (n - 2) * (n - 2) - (n - 3));
  }
}

TEST_CASE("restricted series") {
  auto c = lee_series_restricted(2, 2, SeriesBound::total(8));
  for (const auto& a : c.keys())
    CHECK(c.coefficient(a) == a[0] + a[1] + 1);
  CHECK(lee_series_restricted(5, 0, SeriesBound::total(4)) == lee_series(5, SeriesBound::total(4)));
}

TEST_CASE("total Hilbert series") {
  auto h4 = total_hilbert(4, 3);
  CHECK(h4[0] == 1);
  CHECK(h4[1] == 8);
  CHECK(h4[2] == 30);
  auto h3 = total_hilbert(3, 8);
  for (int k = 0; k <= 8; ++k)
    CHECK(h3[static_cast<std::size_t>(k)] == binomial_i64(k + 2, 2));
  for (int n = 3; n <= 8; ++n) {
    const int D = n <= 5 ? 12 : 8;
    auto diag = lee_series(n, SeriesBound::total(D)).diagonal_sums();
    auto h = total_hilbert(n, D);
    for (int k = 0; k <= D; ++k)
      CHECK(diag[static_cast<std::size_t>(k)] == h[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("curve module series") {
  auto c = curve_module_series(5, SeriesBound::total(4));
  CHECK(c.num_vars() == 4);
  CHECK(c.coefficient({0, 0, 0, 0}) == 1);
  CHECK(c.coefficient({1, 0, 0, 0}) == 3);
  CHECK(c == lee_series_restricted(4, 1, SeriesBound::total(4)));
  CHECK_THROWS_AS(curve_module_series(3, SeriesBound::total(2)), std::invalid_argument);
}

TEST_CASE("closed form agrees with series arithmetic") {
  for (int n = 3; n <= 7; ++n) {
    auto s = lee_series(n, SeriesBound::total(n <= 5 ? 6 : 4));
    for (const auto& a : s.keys()) {
      CHECK(s.coefficient(a) >= 0);
      CHECK(s.coefficient(a) == lee_coefficient(n - 3, a));
    }
  }
  auto capped = lee_series(4, SeriesBound::per_coordinate({2, 1, 3, 0}));
  for (const auto& a : capped.keys())
    CHECK(capped.coefficient(a) == lee_coefficient(1, a));
}

TEST_CASE("series bounds") {
  auto s = lee_series(4, SeriesBound::total(2));
  CHECK_THROWS_AS(s.coefficient({3, 0, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(s.coefficient({1, 0, 0}), std::out_of_range);
  auto g = TruncatedSeries::geometric(2, SeriesBound::total(5), 1);
  CHECK(g.coefficient({5, 0}) == 1);
  CHECK(g.coefficient({0, 1}) == 0);
  auto one = TruncatedSeries::one(2, SeriesBound::total(5));
  CHECK(g * one == g);
  CHECK(one.divided_by_one_minus(1) == g);
}

TEST_CASE("univariate helpers") {
  auto inv = series_inverse({1, -1}, 5);
  for (auto c : inv)
    CHECK(c == 1);
  CHECK(poly_times({1, 1}, {1, -1}, 3) == std::vector<std::int64_t>{1, 0, -1, 0});
  CHECK(binomial_i64(6, 2) == 15);
  CHECK(binomial_i64(3, 5) == 0);
}

TEST_CASE("graded dimensions match the Lee series") {
  for (int n = 4; n <= 5; ++n) {
    auto s = build_An(n);
    const int D = n == 4 ? 4 : 3;
    auto lee = lee_series(n, SeriesBound::total(D));
    for (const auto& a : lee.keys())
      CHECK(static_cast<std::int64_t>(graded_dim(s, a)) == lee.coefficient(a));
  }
}
