#ifndef PSI_POLY_HPP
#define PSI_POLY_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "psi/monomial.hpp"
#include "psi/scalar.hpp"

namespace psi {

template <class C>
struct Term {
  Monomial mono;
  C coeff;
};

/// Sparse polynomial over a Ring. Terms are kept strictly decreasing in
/// the ring's monomial order with no zero coefficients, so equal
/// polynomials have identical term lists.
template <class C>
class Poly {
public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  Poly(RingPtr ring, std::vector<Term<C>> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
  }

  static Poly constant(RingPtr ring, const C& c) {
    Poly p(ring);
    if (!psi::is_zero(c))
      p.terms_.push_back({ring->one(), c});
    return p;
  }

  static Poly variable(RingPtr ring, std::size_t k, const C& one) {
    Poly p(ring);
    p.terms_.push_back({ring->variable(k), one});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  std::span<const Term<C>> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const C& leading_coeff() const { return terms_.front().coeff; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_)
      d = std::max(d, t.mono.total_degree());
    return d;
  }

  /// Common multidegree of all terms, or nullopt when inhomogeneous
  /// (or zero).
  std::optional<std::vector<Exponent>> multidegree() const {
    if (terms_.empty())
      return std::nullopt;
    auto md = terms_.front().mono.multidegree();
    for (const auto& t : terms_)
      if (!std::equal(md.begin(), md.end(), t.mono.multidegree().begin()))
        return std::nullopt;
    return std::vector<Exponent>(md.begin(), md.end());
  }
  bool is_multihomogeneous() const { return multidegree().has_value(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_)
      t.coeff = -t.coeff;
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = combine(*this, o, true); }
  Poly& operator-=(const Poly& o) { return *this = combine(*this, o, false); }
  friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, true); }
  friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, false); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    std::vector<Term<C>> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        out.push_back({s.mono * t.mono, C(s.coeff * t.coeff)});
    return Poly(a.ring_, std::move(out));
  }

  Poly scaled(const C& c) const {
    if (psi::is_zero(c))
      return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_)
      t.coeff = C(t.coeff * c);
    return r;
  }

  /// c * m * this; order is preserved since term orders are multiplicative.
  Poly mul_term(const C& c, const Monomial& m) const {
    if (psi::is_zero(c))
      return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.mono = t.mono * m;
      t.coeff = C(t.coeff * c);
    }
    return r;
  }

  /// this - c * m * g, in one merge pass.
  void sub_mul_term(const C& c, const Monomial& m, const Poly& g) {
    std::vector<Term<C>> out;
    out.reserve(terms_.size() + g.terms_.size());
    const auto& ord = ring_->order();
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      if (i == terms_.size()) {
        out.push_back({std::move(gm), C(-(c * g.terms_[j].coeff))});
        ++j;
        continue;
      }
      Cmp cmp = ord.compare(terms_[i].mono, gm);
      if (cmp == Cmp::GT) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp == Cmp::LT) {
        out.push_back({std::move(gm), C(-(c * g.terms_[j].coeff))});
        ++j;
      } else {
        C v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!psi::is_zero(v))
          out.push_back({std::move(gm), std::move(v)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  Poly monic() const {
    if (terms_.empty())
      return *this;
    return scaled(inverse(leading_coeff()));
  }

  /// Partial derivative with respect to variable k.
  Poly derivative(std::size_t k) const {
    std::vector<Term<C>> out;
    for (const auto& t : terms_) {
      Exponent e = t.mono[k];
      if (e == 0)
        continue;
      std::vector<Exponent> ex(t.mono.exponents().begin(), t.mono.exponents().end());
      --ex[k];
      out.push_back({ring_->monomial(std::move(ex)), C(t.coeff * scalar_like(t.coeff, e))});
    }
    return Poly(ring_, std::move(out));
  }

  /// Exact evaluation at a point given as one value per variable.
  C evaluate(std::span<const C> point, const C& zero) const {
    if (point.size() != ring_->num_vars())
      throw std::invalid_argument("point has wrong dimension");
    C acc = zero;
    for (const auto& t : terms_) {
      C v = t.coeff;
      for (std::size_t k = 0; k < point.size(); ++k)
        for (Exponent e = 0; e < t.mono[k]; ++e)
          v = C(v * point[k]);
      acc = C(acc + v);
    }
    return acc;
  }

  /// Same polynomial re-sorted under another ring with identical variables.
  Poly with_ring(RingPtr r) const {
    if (r->num_vars() != ring_->num_vars())
      throw std::invalid_argument("ring mismatch");
    std::vector<Term<C>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
      out.push_back({r->monomial({t.mono.exponents().begin(), t.mono.exponents().end()}), t.coeff});
    return Poly(std::move(r), std::move(out));
  }

  template <class D, class F>
  Poly<D> map_coeffs(F&& f) const {
    std::vector<Term<D>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
      out.push_back({t.mono, f(t.coeff)});
    return Poly<D>(ring_, std::move(out));
  }

  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::string s;
    for (const auto& t : terms_) {
      C c = t.coeff;
      bool negative = false;
      if constexpr (std::is_same_v<C, Rational>) {
        negative = sgn(c) < 0;
        if (negative)
          c = -c;
      }
      if (s.empty())
        s = negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      if (t.mono.is_one())
        s += psi::to_string(c);
      else if (is_one(c))
        s += ring_->to_string(t.mono);
      else
        s += psi::to_string(c) + "*" + ring_->to_string(t.mono);
    }
    return s;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size())
      return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (!(a.terms_[k].mono == b.terms_[k].mono) || !(a.terms_[k].coeff == b.terms_[k].coeff))
        return false;
    return true;
  }

private:
  static C scalar_like(const C& like, long v) {
    if constexpr (std::is_same_v<C, Zp>)
      return Zp(v, like.modulus());
    else
      return C(v);
  }

  void check_ring(const Poly& o) const {
    if (ring_ != o.ring_ && (ring_ == nullptr || o.ring_ == nullptr ||
                             ring_->num_vars() != o.ring_->num_vars()))
      throw std::invalid_argument("polynomials from different rings");
  }

  void normalize() {
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<C>& a, const Term<C>& b) { return ord.compare(a.mono, b.mono) == Cmp::GT; });
    std::vector<Term<C>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = C(out.back().coeff + t.coeff);
      else
        out.push_back(std::move(t));
      if (psi::is_zero(out.back().coeff))
        out.pop_back();
    }
    terms_ = std::move(out);
  }

  static Poly combine(const Poly& a, const Poly& b, bool add) {
    a.check_ring(b);
    Poly r(a.ring_ ? a.ring_ : b.ring_);
    const auto& ord = r.ring_->order();
    std::size_t i = 0, j = 0;
    auto& out = r.terms_;
    out.reserve(a.size() + b.size());
    while (i < a.size() || j < b.size()) {
      Cmp cmp = i == a.size()   ? Cmp::LT
                : j == b.size() ? Cmp::GT
                                : ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp == Cmp::GT) {
        out.push_back(a.terms_[i++]);
      } else if (cmp == Cmp::LT) {
        out.push_back({b.terms_[j].mono, add ? b.terms_[j].coeff : C(-b.terms_[j].coeff)});
        ++j;
      } else {
        C v = add ? C(a.terms_[i].coeff + b.terms_[j].coeff) : C(a.terms_[i].coeff - b.terms_[j].coeff);
        if (!psi::is_zero(v))
          out.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term<C>> terms_;
};

using QPoly = Poly<Rational>;
using PPoly = Poly<Zp>;

/// Reduces every coefficient into F_p.
inline PPoly to_prime(const QPoly& p, std::uint32_t modulus) {
  return p.map_coeffs<Zp>([&](const Rational& q) { return reduce_mod(q, modulus); });
}

inline QPoly convert_poly(const QPoly& p, const RationalField&) { return p; }
inline PPoly convert_poly(const QPoly& p, const PrimeField& f) { return to_prime(p, f.modulus()); }

}  // namespace psi

#endif  // PSI_POLY_HPP
