#include <doctest.h>

#include <random>

#include "psi/monomial.hpp"
#include "psi/poly.hpp"
#include "psi/scalar.hpp"

using namespace psi;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  return make_rational(num(rng), den(rng));
}

Zp random_zp(std::mt19937_64& rng, std::uint32_t p) {
  return Zp(static_cast<std::int64_t>(rng() % p), p);
}

RingPtr small_ring(MonomialOrder::Kind kind = MonomialOrder::Kind::GrevLex) {
  // alpha[1,2], alpha[1,3] in block 1; alpha[2,1] in block 2
  std::vector<VarIndex> v{VarIndex::alpha(1, 2), VarIndex::alpha(1, 3), VarIndex::alpha(2, 1)};
  return std::make_shared<Ring>(v, 2, MonomialOrder::standard(kind, v.size()));
}

template <class C, class Gen>
void check_axioms(Gen gen, C zero, C one) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    C a = gen(rng), b = gen(rng), c = gen(rng);
    CHECK(C(a + b) == C(b + a));
    CHECK(C(a * b) == C(b * a));
    CHECK(C((a + b) + c) == C(a + (b + c)));
    CHECK(C((a * b) * c) == C(a * (b * c)));
    CHECK(C(a * (b + c)) == C(a * b + a * c));
    CHECK(C(a + zero) == a);
    CHECK(C(a * one) == a);
    CHECK(C(a - a) == zero);
    if (!is_zero(a))
      CHECK(C(a * inverse(a)) == one);
  }
}

}  // namespace

TEST_CASE("field axioms over Q") {
  RationalField f;
  check_axioms<Rational>(random_rational, f.zero(), f.one());
}

TEST_CASE("field axioms over F_p") {
  for (std::uint32_t p : {7u, 65537u, kDefaultPrime}) {
    PrimeField f(p);
    check_axioms<Zp>([p](std::mt19937_64& r) { return random_zp(r, p); }, f.zero(), f.one());
  }
}

TEST_CASE("rational normal form and small examples") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), FieldError);
  CHECK(Zp(3, 7).inverse() == Zp(5, 7));
  CHECK(Zp(-1, 7).value() == 6u);
  CHECK(reduce_mod(make_rational(1, 2), 7) == Zp(4, 7));
}

TEST_CASE("field error paths") {
  CHECK_THROWS_AS(Zp(1, 7) + Zp(1, 11), FieldError);
  CHECK_THROWS_AS(Zp(0, 7).inverse(), FieldError);
  CHECK_THROWS_AS(inverse(Rational(0)), FieldError);
  CHECK_THROWS_AS(reduce_mod(make_rational(1, 7), 7), FieldError);
  CHECK_THROWS_AS(scalar_arith(Scalar{Rational(1)}, Scalar{Zp(1, 7)}, ScalarOp::Add), FieldError);
  CHECK(std::get<Rational>(scalar_arith(Scalar{Rational(2)}, Scalar{Rational(0)}, ScalarOp::Inv)) == Rational(1, 2));
}

TEST_CASE("primality") {
  CHECK(is_prime(kDefaultPrime));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4294967295ull));
}

TEST_CASE("polynomial ring identities") {
  auto R = small_ring();
  auto x = QPoly::variable(R, 0, Rational(1));
  auto y = QPoly::variable(R, 1, Rational(1));
  auto one = QPoly::constant(R, Rational(1));
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x * one == x);
  CHECK((x - x).is_zero());

  std::mt19937_64 rng(11);
  auto random_poly = [&] {
    std::vector<Term<Rational>> t;
    int k = static_cast<int>(rng() % 20);
    for (int i = 0; i < k; ++i)
      t.push_back({R->monomial({static_cast<Exponent>(rng() % 3), static_cast<Exponent>(rng() % 3),
                                static_cast<Exponent>(rng() % 3)}),
                   random_rational(rng)});
    return QPoly(R, std::move(t));
  };
  for (int t = 0; t < 50; ++t) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("multidegree is additive") {
  auto R = small_ring();
  auto a = R->monomial({1, 2, 0});
  auto b = R->monomial({0, 1, 3});
  auto p = a * b;
  CHECK(p.multidegree()[0] == a.multidegree()[0] + b.multidegree()[0]);
  CHECK(p.multidegree()[1] == a.multidegree()[1] + b.multidegree()[1]);
  CHECK(p.total_degree() == 7);
  CHECK(p.cache_consistent(R->blocks()));
  CHECK(a.divides(p));
  CHECK(p / a == b);
}

TEST_CASE("term orders") {
  for (auto kind : {MonomialOrder::Kind::GrevLex, MonomialOrder::Kind::Lex, MonomialOrder::Kind::BlockGrevLex}) {
    auto R = small_ring(kind);
    const auto& ord = R->order();
    std::mt19937_64 rng(3);
    auto rm = [&] {
      return R->monomial({static_cast<Exponent>(rng() % 4), static_cast<Exponent>(rng() % 4),
                          static_cast<Exponent>(rng() % 4)});
    };
    for (int t = 0; t < 1000; ++t) {
      auto a = rm(), b = rm(), c = rm();
      auto ab = ord.compare(a, b);
      CHECK(ord.compare(a * c, b * c) == ab);
      CHECK((ab == Cmp::EQ) == (a == b));
      if (!a.is_one())
        CHECK(ord.compare(R->one(), a) == Cmp::LT);
    }
  }
  auto R = small_ring();
  CHECK(R->order().compare(R->monomial({2, 0, 0}), R->monomial({1, 1, 0})) == Cmp::GT);
  // grevlex: x0*x2 < x1^2 since x2 is the smallest variable
  CHECK(R->order().compare(R->monomial({1, 0, 1}), R->monomial({0, 2, 0})) == Cmp::LT);
}

TEST_CASE("variable names round-trip") {
  for (auto v : {VarIndex::alpha(1, 2), VarIndex::alpha(5, 3), VarIndex::phi(1, 4)})
    CHECK(VarIndex::parse(v.name()) == v);
  CHECK(VarIndex::alpha(1, 2).name() == "a[1,2]");
  CHECK(VarIndex::phi(2, 3).block() == 3);
  CHECK_THROWS(VarIndex::parse("b[1,2]"));
}

TEST_CASE("printing") {
  auto R = small_ring();
  auto x = QPoly::variable(R, 0, Rational(1));
  auto y = QPoly::variable(R, 1, Rational(1));
  CHECK((x - y.scaled(make_rational(1, 2))).to_string() == "a[1,2] - 1/2*a[1,3]");
}
