#include "psi/scalar.hpp"

namespace psi {

Zp::Zp(std::int64_t v, std::uint32_t p) : p_(p) {
  if (p < 2)
    throw FieldError("modulus must be at least 2");
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0)
    r += p;
  r_ = static_cast<std::uint32_t>(r);
}

Zp& Zp::operator+=(const Zp& o) {
  check_same(o);
  std::uint64_t s = std::uint64_t{r_} + o.r_;
  if (s >= p_)
    s -= p_;
  r_ = static_cast<std::uint32_t>(s);
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  check_same(o);
  r_ = r_ >= o.r_ ? r_ - o.r_ : static_cast<std::uint32_t>(std::uint64_t{r_} + p_ - o.r_);
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  check_same(o);
  r_ = static_cast<std::uint32_t>((std::uint64_t{r_} * o.r_) % p_);
  return *this;
}

Zp Zp::inverse() const {
  if (r_ == 0)
    throw FieldError("inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on signed 64-bit values
  std::int64_t a = r_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1)
    throw FieldError("modulus is not prime");
  return Zp(x0, p_);
}

std::ostream& operator<<(std::ostream& os, const Zp& z) { return os << z.value(); }

Rational inverse(const Rational& q) {
  if (sgn(q) == 0)
    throw FieldError("division by zero");
  return Rational(1) / q;
}

Rational make_rational(long num, long den) {
  if (den == 0)
    throw FieldError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_one(const Rational& q) { return q == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Zp& z) { return std::to_string(z.value()); }

Zp reduce_mod(const Rational& q, std::uint32_t p) {
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0)
    throw FieldError("denominator vanishes modulo " + std::to_string(p));
  if (num < 0)
    num += pz;
  Zp n = Zp::from_raw(static_cast<std::uint32_t>(num.get_ui()), p);
  Zp d = Zp::from_raw(static_cast<std::uint32_t>(den.get_ui()), p);
  return n / d;
}

bool is_prime(std::uint64_t v) {
  if (v < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw FieldError(std::to_string(p) + " is not prime");
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
  if (op != ScalarOp::Inv && op != ScalarOp::Neg && a.index() != b.index())
    throw FieldError("scalars from different fields");
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        switch (op) {
          case ScalarOp::Add:
            return T(x + std::get<T>(b));
          case ScalarOp::Mul:
            return T(x * std::get<T>(b));
          case ScalarOp::Inv:
            return inverse(x);
          case ScalarOp::Neg:
            return T(-x);
        }
        throw FieldError("unknown scalar op");
      },
      a);
}

}  // namespace psi
