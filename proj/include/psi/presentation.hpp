#ifndef PSI_PRESENTATION_HPP
#define PSI_PRESENTATION_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "psi/linalg.hpp"
#include "psi/poly.hpp"

namespace psi {

/// Bad user input: out-of-range n or m, unknown scheme names.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Which marked point each block is normalized at: alpha[i, p(i)] := 0.
class PivotScheme {
public:
  enum class Kind { Cyclic, CommonExtraPoint, Custom };

  /// p(i) = i + 1 mod n.
  static PivotScheme cyclic(int n);
  /// For A_n: p(i) = n, p(n) = n - 1. For B_{n,m}: every block is
  /// normalized at the last extra point n + m.
  static PivotScheme common(int n, int m = 0);
  /// pivot[i-1] = p(i), 1-based.
  static PivotScheme custom(std::vector<int> pivot);
  static PivotScheme parse(const std::string& name, int n, int m = 0);

  Kind kind() const { return kind_; }
  int of(int i) const { return pivot_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& map() const { return pivot_; }
  std::string name() const;

private:
  PivotScheme(Kind k, std::vector<int> p) : kind_(k), pivot_(std::move(p)) {}
  Kind kind_;
  std::vector<int> pivot_;
};

enum class AlgebraKind { An, Bnm };

std::string to_string(AlgebraKind k);
AlgebraKind parse_algebra_kind(const std::string& s);

/// The block pair (i < j, 1-based) a relation belongs to.
struct RelationPair {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const RelationPair&, const RelationPair&) = default;
};

/// One algebra as polynomial ring, grading and quadratic relations. The
/// relations are stored fully expanded with integer coefficients.
struct PresentationSpec {
  AlgebraKind kind = AlgebraKind::An;
  int n = 0;
  int m = 0;
  PivotScheme pivot = PivotScheme::cyclic(3);
  RingPtr ring;
  std::vector<QPoly> relations;
  std::vector<RelationPair> pairs;  // parallel to relations

  int num_blocks() const { return n; }
  std::size_t num_vars() const { return ring->num_vars(); }
  std::string label() const;
};

PresentationSpec build_An(int n, const PivotScheme& pivot,
                          MonomialOrder::Kind order = MonomialOrder::Kind::GrevLex);
PresentationSpec build_An(int n);

/// m = 0 is routed to build_An with the cyclic scheme.
PresentationSpec build_Bnm(int n, int m, MonomialOrder::Kind order = MonomialOrder::Kind::GrevLex);

/// The full spanning set of the relation space for pair (i, j): one
/// element per unordered choice {k, l} of the remaining indices, before
/// picking a basis. Only meaningful for A_n.
std::vector<QPoly> spanning_relations(const PresentationSpec& spec, int i, int j);

/// Relation counts per block pair; throws std::logic_error if any relation
/// is not multihomogeneous of degree e_i + e_j with i != j.
std::map<RelationPair, int> relation_degree_audit(const PresentationSpec& spec);

/// Relations of A_n lifted to the tensor square of V = span of the
/// variables, over F_p. Vectors are indexed by x * dimV + y.
struct TensorRelationSpace {
  int n = 0;
  std::size_t dim_v = 0;
  std::uint32_t modulus = kDefaultPrime;
  std::vector<ModRow> commutators;
  std::vector<ModRow> symmetric;

  std::size_t dim() const { return commutators.size() + symmetric.size(); }
  std::vector<ModRow> basis() const;
};

TensorRelationSpace tensor_relation_space(int n, std::uint32_t p = kDefaultPrime);

/// Rank of the symmetric relations viewed in the symmetric square of V.
std::size_t symmetric_part_rank(const TensorRelationSpace& r);

}  // namespace psi

#endif  // PSI_PRESENTATION_HPP
