#ifndef PSI_MONOMIAL_HPP
#define PSI_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace psi {

/// A generator of one of the presentations: alpha[i,j] lives in block i,
/// phi[r,i] lives in block i. Indices are 1-based as in the text form.
struct VarIndex {
  enum class Kind { Alpha, Phi };
  Kind kind = Kind::Alpha;
  int first = 0;   // alpha: i, phi: r
  int second = 0;  // alpha: j, phi: i

  static VarIndex alpha(int i, int j) { return {Kind::Alpha, i, j}; }
  static VarIndex phi(int r, int i) { return {Kind::Phi, r, i}; }

  int block() const { return kind == Kind::Alpha ? first : second; }
  std::string name() const;
  static VarIndex parse(const std::string& text);

  friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

using Exponent = std::uint16_t;

/// Dense exponent vector with its Z^n multidegree and total degree cached.
/// Only a Ring builds monomials from raw exponents, so the caches are
/// always consistent with the variable blocks.
class Monomial {
public:
  Monomial() = default;

  std::span<const Exponent> exponents() const { return exps_; }
  std::span<const Exponent> multidegree() const { return mdeg_; }
  int total_degree() const { return total_; }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  std::size_t num_vars() const { return exps_.size(); }
  bool is_one() const { return total_ == 0; }

  bool divides(const Monomial& o) const;
  /// Product; both sides must come from the same ring.
  Monomial operator*(const Monomial& o) const;
  /// Quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  bool coprime(const Monomial& o) const;

  /// Recomputes the multidegree from the exponents using block_of.
  bool cache_consistent(std::span<const int> block_of) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

private:
  friend class Ring;
  std::vector<Exponent> exps_;
  std::vector<Exponent> mdeg_;
  int total_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Term order on a fixed variable universe. priority[0] is the most
/// significant variable.
class MonomialOrder {
public:
  enum class Kind { GrevLex, Lex, BlockGrevLex };

  MonomialOrder() = default;
  MonomialOrder(Kind kind, std::vector<int> priority);
  /// Canonical priority: variable 0 first.
  static MonomialOrder standard(Kind kind, std::size_t num_vars);

  Kind kind() const { return kind_; }
  std::span<const int> priority() const { return priority_; }

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }

  std::string name() const;
  static Kind parse_kind(const std::string& s);

private:
  Kind kind_ = Kind::GrevLex;
  std::vector<int> priority_;
};

/// Variable universe of a presentation together with its grading and the
/// active monomial order.
class Ring {
public:
  Ring(std::vector<VarIndex> vars, int num_blocks, MonomialOrder order);

  std::size_t num_vars() const { return vars_.size(); }
  int num_blocks() const { return nblocks_; }
  const VarIndex& var(std::size_t k) const { return vars_[k]; }
  std::span<const VarIndex> vars() const { return vars_; }
  /// 0-based block of variable k.
  int block_of(std::size_t k) const { return block_of_[k]; }
  std::span<const int> blocks() const { return block_of_; }
  /// Number of variables in 0-based block b.
  int block_size(int b) const { return block_size_[static_cast<std::size_t>(b)]; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable, or -1.
  int index_of(const VarIndex& v) const;

  Monomial one() const;
  Monomial variable(std::size_t k, Exponent e = 1) const;
  Monomial monomial(std::vector<Exponent> exps) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;

  std::string to_string(const Monomial& m) const;

  /// Same variables and grading under another order.
  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;

private:
  std::vector<VarIndex> vars_;
  int nblocks_;
  std::vector<int> block_of_;
  std::vector<int> block_size_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace psi

#endif  // PSI_MONOMIAL_HPP
