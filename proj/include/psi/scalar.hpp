#ifndef PSI_SCALAR_HPP
#define PSI_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace psi {

/// Raised on division by zero, mixing residues of different moduli, or
/// reducing a rational whose denominator vanishes mod p.
class FieldError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Largest prime below 2^32. Residues fit in 32 bits, so a product of two
/// residues fits in a 64-bit word before reduction.
inline constexpr std::uint32_t kDefaultPrime = 4294967291u;

using Rational = mpq_class;

/// Residue class modulo a prime p < 2^32. Every value carries its modulus;
/// arithmetic between different moduli throws FieldError.
class Zp {
public:
  Zp() = default;
  Zp(std::int64_t v, std::uint32_t p);

  static Zp from_raw(std::uint32_t r, std::uint32_t p) {
    Zp z;
    z.r_ = r;
    z.p_ = p;
    return z;
  }

  std::uint32_t value() const { return r_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return r_ == 0; }

  Zp inverse() const;

  Zp operator-() const { return from_raw(r_ == 0 ? 0 : p_ - r_, p_); }
  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend bool operator==(const Zp& a, const Zp& b) {
    return a.r_ == b.r_ && a.p_ == b.p_;
  }

private:
  void check_same(const Zp& o) const {
    if (p_ != o.p_)
      throw FieldError("residues from different prime fields");
  }

  std::uint32_t r_ = 0;
  std::uint32_t p_ = kDefaultPrime;
};

std::ostream& operator<<(std::ostream& os, const Zp& z);

// Uniform helpers so generic code can treat both coefficient types alike.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Zp& z) { return z.is_zero(); }
Rational inverse(const Rational& q);
/// num/den in lowest terms with a positive denominator. mpq_class's own
/// two-argument constructor skips this step. Throws FieldError on den = 0.
Rational make_rational(long num, long den);
inline Zp inverse(const Zp& z) { return z.inverse(); }
bool is_one(const Rational& q);
inline bool is_one(const Zp& z) { return z.value() == 1; }
std::string to_string(const Rational& q);
std::string to_string(const Zp& z);

/// Reduces a rational into F_p. Throws FieldError when p divides the
/// denominator.
Zp reduce_mod(const Rational& q, std::uint32_t p);

/// Field context: builds constants and names the field.
class RationalField {
public:
  using Elem = Rational;
  Elem from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem convert(const Rational& q) const { return q; }
  std::string name() const { return "rational"; }
};

class PrimeField {
public:
  using Elem = Zp;
  explicit PrimeField(std::uint32_t p = kDefaultPrime);
  std::uint32_t modulus() const { return p_; }
  Elem from_int(std::int64_t v) const { return Zp(v, p_); }
  Elem zero() const { return Zp::from_raw(0, p_); }
  Elem one() const { return Zp::from_raw(1, p_); }
  Elem convert(const Rational& q) const { return reduce_mod(q, p_); }
  std::string name() const { return "prime:" + std::to_string(p_); }

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t v);

/// Tagged scalar for callers that mix backends at runtime.
using Scalar = std::variant<Rational, Zp>;

enum class ScalarOp { Add, Mul, Inv, Neg };

/// Exact field operation on two scalars of the same backend. Inv and Neg
/// ignore b. Throws FieldError on mixed backends or inverting zero.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

}  // namespace psi

#endif  // PSI_SCALAR_HPP
