#include <doctest.h>

#include <algorithm>
#include <random>

#include "psi/koszul.hpp"
#include "psi/linalg.hpp"
#include "psi/series.hpp"

using namespace psi;

namespace {

std::vector<std::size_t> as_sizes(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("predictions") {
  CHECK(koszul_prediction(4, 5) == std::vector<std::int64_t>{1, 8, 34, 112, 341, 1024});
  CHECK(koszul_prediction(3, 5) == std::vector<std::int64_t>{1, 3, 3, 1, 0, 0});
  auto p5 = koszul_prediction(5, 3);
  CHECK(p5 == std::vector<std::int64_t>{1, 15, 125, 795});
  for (int n = 3; n <= 8; ++n) {
    auto p = koszul_prediction(n, 6);
    CHECK(p == koszul_prediction_closed_form(n, 6));
    CHECK(p[1] == n * (n - 2));
    CHECK(p[2] == static_cast<std::int64_t>(tensor_relation_space(n).dim()));
    for (auto b : p)
      CHECK(b >= 0);
  }
}

TEST_CASE("dual dimensions for n = 3 and n = 4") {
  auto r3 = tensor_relation_space(3);
  CHECK(intersection_dimensions(r3.basis(), r3.dim_v, 5) == as_sizes({1, 3, 3, 1, 0, 0}));
  auto r4 = tensor_relation_space(4);
  CHECK(intersection_dimensions(r4.basis(), r4.dim_v, 4) == as_sizes({1, 8, 34, 112, 341}));
  CHECK(dual_dimension(4, 0) == 1);
  CHECK(dual_dimension(4, 1) == 8);
  CHECK(dual_dimension(4, 2) == 34);
}

TEST_CASE("iterative route agrees with the stacked intersection") {
  for (int n = 3; n <= 4; ++n) {
    auto r = tensor_relation_space(n);
    auto dims = intersection_dimensions(r.basis(), r.dim_v, 4);
    for (int k = 2; k <= (n == 3 ? 4 : 3); ++k) {
      std::vector<int> all;
      for (int s = 0; s <= k - 2; ++s)
        all.push_back(s);
      CHECK(stacked_intersection_dimension(r.basis(), r.dim_v, k, all, kDefaultPrime) ==
            dims[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("fewer constraint slots give a larger space") {
  auto r = tensor_relation_space(4);
  auto both = stacked_intersection_dimension(r.basis(), r.dim_v, 3, {0, 1}, kDefaultPrime);
  auto first = stacked_intersection_dimension(r.basis(), r.dim_v, 3, {0}, kDefaultPrime);
  auto second = stacked_intersection_dimension(r.basis(), r.dim_v, 3, {1}, kDefaultPrime);
  CHECK(both == 112);
  CHECK(first == 272);
  CHECK(second == 272);
  CHECK(both <= first);
}

TEST_CASE("dimensions do not depend on the relation basis") {
  auto r = tensor_relation_space(4);
  auto basis = r.basis();
  const std::uint32_t p = kDefaultPrime;
  std::mt19937_64 rng(17);
  auto expect = intersection_dimensions(basis, r.dim_v, 3);
  for (int t = 0; t < 3; ++t) {
    auto b = basis;
    std::shuffle(b.begin(), b.end(), rng);
    for (auto& row : b) {
      std::uint32_t c = static_cast<std::uint32_t>(rng() % (p - 1)) + 1;
      for (auto& x : row)
        x = mul_mod(x, c, p);
    }
    // add a multiple of one relation to another
    for (std::size_t k = 0; k < b[0].size(); ++k)
      b[0][k] = add_mod(b[0][k], mul_mod(b[1][k], 5, p), p);
    CHECK(intersection_dimensions(b, r.dim_v, 3) == expect);
  }
}

TEST_CASE("budget refusal") {
  KoszulOptions o;
  o.max_columns = 1000;
  CHECK_THROWS_AS(dual_dimension(5, 4, o), BudgetExceeded);
  try {
    dual_dimension(5, 4, o);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() > 1000);
  }
}

TEST_CASE("reports") {
  auto rep3 = koszul_report(3, 4);
  CHECK_FALSE(rep3.first_discrepancy.has_value());
  auto rep4 = koszul_report(4, 4);
  CHECK_FALSE(rep4.first_discrepancy.has_value());
  CHECK(rep4.dim_r == 34);
  CHECK(rep4.b2_identity);
  CHECK(rep4.verdict == "consistent with Koszulness up to degree 4");
  for (const auto& row : rep4.rows)
    CHECK(row.match);
}
