#ifndef PSI_CURVES_HPP
#define PSI_CURVES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "psi/groebner.hpp"
#include "psi/linalg.hpp"
#include "psi/presentation.hpp"

namespace psi {

/// A geometric input that violates a stated precondition (coincident
/// points, zero scalings, a point off the variety).
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Marked points z_1..z_n on the affine line with tangent scalings
/// lambda_i, plus extra points q_1..q_m for B_{n,m}.
template <class C>
struct PointConfig {
  std::vector<C> z;
  std::vector<C> lambda;
  std::vector<C> q;

  int n() const { return static_cast<int>(z.size()); }
  int m() const { return static_cast<int>(q.size()); }
};

template <class C>
void validate_config(const PointConfig<C>& cfg) {
  if (cfg.lambda.size() != cfg.z.size())
    throw PreconditionError("need one scaling per marked point");
  std::vector<C> all = cfg.z;
  all.insert(all.end(), cfg.q.begin(), cfg.q.end());
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (all[a] == all[b])
        throw PreconditionError("coincident points in configuration");
  for (const auto& l : cfg.lambda)
    if (is_zero(l))
      throw PreconditionError("tangent scaling must be nonzero");
}

template <class F>
PointConfig<typename F::Elem> make_config(const F& field, const std::vector<std::int64_t>& z,
                                          const std::vector<std::int64_t>& lambda,
                                          const std::vector<std::int64_t>& q = {}) {
  PointConfig<typename F::Elem> cfg;
  for (auto v : z)
    cfg.z.push_back(field.from_int(v));
  for (auto v : lambda)
    cfg.lambda.push_back(field.from_int(v));
  for (auto v : q)
    cfg.q.push_back(field.from_int(v));
  validate_config(cfg);
  return cfg;
}

/// Positions are distinct integers in [-R, R] with R = 3(n + m) + 3,
/// scalings nonzero integers in [-5, 5].
struct IntegerConfig {
  std::vector<std::int64_t> z, lambda, q;
};
IntegerConfig sample_integer_config(int n, int m, std::mt19937_64& rng);

template <class F>
PointConfig<typename F::Elem> sample_config(const F& field, int n, int m, std::mt19937_64& rng) {
  auto ic = sample_integer_config(n, m, rng);
  return make_config(field, ic.z, ic.lambda, ic.q);
}

/// alpha~_ij = lambda_i / (z_j - z_i), indexed [i-1][j-1]; diagonal zero.
template <class C>
std::vector<std::vector<C>> alpha_tilde(const PointConfig<C>& cfg, const C& zero) {
  const auto n = cfg.z.size();
  std::vector<std::vector<C>> a(n, std::vector<C>(n, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j)
        a[i][j] = cfg.lambda[i] / (cfg.z[j] - cfg.z[i]);
  return a;
}

/// Full table alpha[i][j] (including the normalized entry, which is 0)
/// of A_n under the given pivot scheme.
template <class C>
std::vector<std::vector<C>> alpha_table(const PointConfig<C>& cfg, const PivotScheme& pivot, const C& zero) {
  validate_config(cfg);
  auto at = alpha_tilde(cfg, zero);
  const auto n = cfg.z.size();
  for (std::size_t i = 0; i < n; ++i) {
    const C shift = at[i][static_cast<std::size_t>(pivot.of(static_cast<int>(i) + 1) - 1)];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i)
        at[i][j] = at[i][j] - shift;
  }
  return at;
}

/// Coordinates (in ring variable order) of the point of Spec(A_n) or
/// Spec(B_{n,m}) attached to a configuration.
template <class C>
std::vector<C> alpha_from_config(const PointConfig<C>& cfg, const PresentationSpec& spec, const C& zero) {
  validate_config(cfg);
  if (cfg.n() != spec.n || (spec.kind == AlgebraKind::Bnm && cfg.m() != spec.m))
    throw PreconditionError("configuration does not match " + spec.label());
  const Ring& ring = *spec.ring;
  std::vector<C> pt(ring.num_vars(), zero);
  if (spec.kind == AlgebraKind::An) {
    auto table = alpha_table(cfg, spec.pivot, zero);
    for (std::size_t k = 0; k < ring.num_vars(); ++k) {
      const auto& v = ring.var(k);
      pt[k] = table[static_cast<std::size_t>(v.first - 1)][static_cast<std::size_t>(v.second - 1)];
    }
    return pt;
  }
  // B_{n,m}: every block normalized at the last extra point
  const C& qm = cfg.q.back();
  auto base = [&](std::size_t i) -> C { return cfg.lambda[i] / (qm - cfg.z[i]); };
  for (std::size_t k = 0; k < ring.num_vars(); ++k) {
    const auto& v = ring.var(k);
    if (v.kind == VarIndex::Kind::Alpha) {
      auto i = static_cast<std::size_t>(v.first - 1), j = static_cast<std::size_t>(v.second - 1);
      pt[k] = cfg.lambda[i] / (cfg.z[j] - cfg.z[i]) - base(i);
    } else {
      auto r = static_cast<std::size_t>(v.first - 1), i = static_cast<std::size_t>(v.second - 1);
      pt[k] = cfg.lambda[i] / (cfg.q[r] - cfg.z[i]) - base(i);
    }
  }
  return pt;
}

struct VanishingResult {
  bool ok = true;
  std::optional<std::size_t> first_failure;  // relation index
};

template <class F>
VanishingResult verify_vanishing(const PresentationSpec& spec, const F& field,
                                 const std::vector<typename F::Elem>& pt) {
  if (pt.size() != spec.num_vars())
    throw PreconditionError("point has wrong dimension for " + spec.label());
  VanishingResult res;
  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    auto rel = convert_poly(spec.relations[r], field);
    if (!is_zero(rel.evaluate(pt, field.zero()))) {
      res.ok = false;
      res.first_failure = r;
      return res;
    }
  }
  return res;
}

struct CijResult {
  bool ok = true;
  std::optional<std::array<int, 4>> witness;  // (i, j, k, k'), 1-based
};

/// c_ij = a_ik a_jk - a_ij a_jk - a_ik a_ji must not depend on k.
template <class C>
CijResult cij_consistency_table(const std::vector<std::vector<C>>& a) {
  const int n = static_cast<int>(a.size());
  CijResult res;
  auto at = [&](int i, int j) -> const C& { return a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j)
        continue;
      std::optional<C> first;
      int k0 = 0;
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j)
          continue;
        C c = at(i, k) * at(j, k) - at(i, j) * at(j, k) - at(i, k) * at(j, i);
        if (!first) {
          first = c;
          k0 = k;
        } else if (!(c == *first)) {
          res.ok = false;
          res.witness = std::array<int, 4>{i, j, k0, k};
          return res;
        }
      }
    }
  return res;
}

template <class C>
CijResult cij_consistency(const PointConfig<C>& cfg, const C& zero) {
  validate_config(cfg);
  if (cfg.n() < 3)
    throw PreconditionError("c_ij consistency needs n >= 3");
  return cij_consistency_table(alpha_tilde(cfg, zero));
}

/// Rank of the relation Jacobian at a point of the variety.
template <class F>
std::size_t jacobian_rank_at(const PresentationSpec& spec, const F& field, const std::vector<typename F::Elem>& pt) {
  if (!verify_vanishing(spec, field, pt).ok)
    throw PreconditionError("Jacobian rank requested at a point off the variety");
  DenseMatrix<typename F::Elem> jac;
  for (const auto& rel : spec.relations) {
    auto p = convert_poly(rel, field);
    std::vector<typename F::Elem> row;
    for (std::size_t k = 0; k < spec.num_vars(); ++k)
      row.push_back(p.derivative(k).evaluate(pt, field.zero()));
    jac.push_back(std::move(row));
  }
  if (jac.empty())
    return 0;
  return exact_rank(jac);
}

struct SingularLocusResult {
  std::size_t codimension = 0;
  std::size_t minors = 0;          // number of c x c minors enumerated
  std::size_t independent_minors = 0;
  std::size_t basis_size = 0;
  bool empty = false;
  std::size_t dimension = 0;  // meaningful when !empty
};

/// Number of c x c minors of an r x v matrix, saturating.
std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t c);

/// dim V(relations + all c x c minors of the Jacobian) over F_p. Throws
/// BudgetExceeded when more than `budget` minors would be needed.
SingularLocusResult singular_locus_dim(const PresentationSpec& spec, std::size_t c, std::size_t budget,
                                       std::uint32_t p = kDefaultPrime);

/// (n-1)(n-3) for A_n; for other presentations #vars minus the Krull
/// dimension of the algebra.
std::size_t expected_codimension(const PresentationSpec& spec, std::uint32_t p = kDefaultPrime);

}  // namespace psi

#endif  // PSI_CURVES_HPP
