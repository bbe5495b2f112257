#include "psi/presentation.hpp"

#include <algorithm>

namespace psi {

PivotScheme PivotScheme::cyclic(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    p[static_cast<std::size_t>(i - 1)] = i % n + 1;
  return PivotScheme(Kind::Cyclic, std::move(p));
}

PivotScheme PivotScheme::common(int n, int m) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    p[static_cast<std::size_t>(i - 1)] = m > 0 ? n + m : (i == n ? n - 1 : n);
  return PivotScheme(Kind::CommonExtraPoint, std::move(p));
}

PivotScheme PivotScheme::custom(std::vector<int> pivot) {
  for (std::size_t k = 0; k < pivot.size(); ++k)
    if (pivot[k] == static_cast<int>(k + 1) || pivot[k] < 1)
      throw UsageError("pivot of block " + std::to_string(k + 1) + " is invalid");
  return PivotScheme(Kind::Custom, std::move(pivot));
}

PivotScheme PivotScheme::parse(const std::string& name, int n, int m) {
  if (name == "cyclic")
    return cyclic(n);
  if (name == "common")
    return common(n, m);
  throw UsageError("unknown pivot scheme: " + name);
}

std::string PivotScheme::name() const {
  switch (kind_) {
    case Kind::Cyclic:
      return "cyclic";
    case Kind::CommonExtraPoint:
      return "common";
    case Kind::Custom:
      return "custom";
  }
  return "?";
}

std::string to_string(AlgebraKind k) { return k == AlgebraKind::An ? "an" : "bnm"; }

AlgebraKind parse_algebra_kind(const std::string& s) {
  if (s == "an")
    return AlgebraKind::An;
  if (s == "bnm")
    return AlgebraKind::Bnm;
  throw UsageError("unknown algebra kind: " + s);
}

std::string PresentationSpec::label() const {
  if (kind == AlgebraKind::An)
    return "A_" + std::to_string(n);
  return "B_{" + std::to_string(n) + "," + std::to_string(m) + "}";
}

namespace {

class LinearForms {
public:
  explicit LinearForms(RingPtr ring) : ring_(std::move(ring)) {}

  QPoly var(const VarIndex& v) const {
    int k = ring_->index_of(v);
    if (k < 0)
      return QPoly(ring_);  // normalized away
    return QPoly::variable(ring_, static_cast<std::size_t>(k), Rational(1));
  }
  QPoly alpha(int i, int j) const { return var(VarIndex::alpha(i, j)); }
  QPoly phi(int r, int i) const { return var(VarIndex::phi(r, i)); }

  // (a_ik - a_ij)(a_jk - a_ji)
  QPoly cross(int i, int j, int k) const {
    return (alpha(i, k) - alpha(i, j)) * (alpha(j, k) - alpha(j, i));
  }

private:
  RingPtr ring_;
};

std::vector<int> others(int n, int i, int j) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (k != i && k != j)
      out.push_back(k);
  return out;
}

}  // namespace

PresentationSpec build_An(int n, const PivotScheme& pivot, MonomialOrder::Kind order) {
  if (n < 3)
    throw UsageError("A_n needs n >= 3, got " + std::to_string(n));
  if (pivot.map().size() != static_cast<std::size_t>(n))
    throw UsageError("pivot scheme has wrong size");
  for (int i = 1; i <= n; ++i)
    if (pivot.of(i) == i || pivot.of(i) < 1 || pivot.of(i) > n)
      throw UsageError("pivot of block " + std::to_string(i) + " must be another marked point");

  std::vector<VarIndex> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != pivot.of(i))
        vars.push_back(VarIndex::alpha(i, j));
  auto nv = vars.size();
  auto ring = std::make_shared<Ring>(std::move(vars), n, MonomialOrder::standard(order, nv));

  PresentationSpec spec;
  spec.kind = AlgebraKind::An;
  spec.n = n;
  spec.m = 0;
  spec.pivot = pivot;
  spec.ring = ring;

  LinearForms f(ring);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      auto rest = others(n, i, j);
      const int l0 = rest.front();
      QPoly base = f.cross(i, j, l0);
      for (std::size_t t = 1; t < rest.size(); ++t) {
        spec.relations.push_back(f.cross(i, j, rest[t]) - base);
        spec.pairs.push_back({i, j});
      }
    }
  }
  return spec;
}

PresentationSpec build_An(int n) { return build_An(n, PivotScheme::cyclic(n < 3 ? 3 : n)); }

PresentationSpec build_Bnm(int n, int m, MonomialOrder::Kind order) {
  if (m == 0)
    return build_An(n, PivotScheme::cyclic(n < 3 ? 3 : n), order);
  if (n < 2 || m < 0)
    throw UsageError("B_{n,m} needs n >= 2 and m >= 0");

  std::vector<VarIndex> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i)
        vars.push_back(VarIndex::alpha(i, j));
  for (int r = 1; r < m; ++r)
    for (int i = 1; i <= n; ++i)
      vars.push_back(VarIndex::phi(r, i));
  auto nv = vars.size();
  auto ring = std::make_shared<Ring>(std::move(vars), n, MonomialOrder::standard(order, nv));

  PresentationSpec spec;
  spec.kind = AlgebraKind::Bnm;
  spec.n = n;
  spec.m = m;
  spec.pivot = PivotScheme::common(n, m);
  spec.ring = ring;

  LinearForms f(ring);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k : others(n, i, j)) {
        spec.relations.push_back(f.alpha(i, k) * f.alpha(j, k) - f.alpha(i, j) * f.alpha(j, k) -
                                 f.alpha(j, i) * f.alpha(i, k));
        spec.pairs.push_back({i, j});
      }
      for (int r = 1; r < m; ++r) {
        spec.relations.push_back(f.phi(r, i) * f.phi(r, j) - f.alpha(i, j) * f.phi(r, j) -
                                 f.alpha(j, i) * f.phi(r, i));
        spec.pairs.push_back({i, j});
      }
    }
  }
  return spec;
}

std::vector<QPoly> spanning_relations(const PresentationSpec& spec, int i, int j) {
  if (spec.kind != AlgebraKind::An)
    throw UsageError("spanning relations are defined for A_n only");
  LinearForms f(spec.ring);
  auto rest = others(spec.n, i, j);
  std::vector<QPoly> out;
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = a + 1; b < rest.size(); ++b)
      out.push_back(f.cross(i, j, rest[a]) - f.cross(i, j, rest[b]));
  return out;
}

std::map<RelationPair, int> relation_degree_audit(const PresentationSpec& spec) {
  std::map<RelationPair, int> counts;
  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    const auto& rel = spec.relations[r];
    auto md = rel.multidegree();
    if (!md)
      throw std::logic_error("relation " + std::to_string(r) + " of " + spec.label() +
                             " is not multihomogeneous");
    std::vector<int> support;
    for (std::size_t b = 0; b < md->size(); ++b) {
      if ((*md)[b] > 1)
        throw std::logic_error("relation " + std::to_string(r) + " is not bilinear");
      if ((*md)[b] == 1)
        support.push_back(static_cast<int>(b) + 1);
    }
    if (support.size() != 2)
      throw std::logic_error("relation " + std::to_string(r) + " does not have degree e_i + e_j");
    RelationPair p{support[0], support[1]};
    if (!(p == spec.pairs[r]))
      throw std::logic_error("relation " + std::to_string(r) + " is filed under the wrong pair");
    ++counts[p];
  }
  return counts;
}

std::vector<ModRow> TensorRelationSpace::basis() const {
  std::vector<ModRow> out = commutators;
  out.insert(out.end(), symmetric.begin(), symmetric.end());
  return out;
}

TensorRelationSpace tensor_relation_space(int n, std::uint32_t p) {
  auto spec = build_An(n);
  TensorRelationSpace out;
  out.n = n;
  out.dim_v = spec.num_vars();
  out.modulus = p;
  const std::size_t d = out.dim_v;
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = x + 1; y < d; ++y) {
      ModRow v(d * d, 0);
      v[x * d + y] = 1;
      v[y * d + x] = p - 1;
      out.commutators.push_back(std::move(v));
    }
  }
  const std::uint32_t half = inv_mod(2, p);
  for (const auto& rel : spec.relations) {
    ModRow v(d * d, 0);
    for (const auto& t : rel.terms()) {
      std::uint32_t c = reduce_mod(t.coeff, p).value();
      std::vector<std::size_t> idx;
      for (std::size_t k = 0; k < d; ++k)
        for (Exponent e = 0; e < t.mono[k]; ++e)
          idx.push_back(k);
      if (idx[0] == idx[1]) {
        v[idx[0] * d + idx[0]] = add_mod(v[idx[0] * d + idx[0]], c, p);
      } else {
        std::uint32_t h = mul_mod(c, half, p);
        v[idx[0] * d + idx[1]] = add_mod(v[idx[0] * d + idx[1]], h, p);
        v[idx[1] * d + idx[0]] = add_mod(v[idx[1] * d + idx[0]], h, p);
      }
    }
    out.symmetric.push_back(std::move(v));
  }
  return out;
}

std::size_t symmetric_part_rank(const TensorRelationSpace& r) {
  const std::size_t d = r.dim_v;
  std::vector<ModRow> rows;
  for (const auto& v : r.symmetric) {
    ModRow s;
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = x; y < d; ++y)
        s.push_back(x == y ? v[x * d + x] : add_mod(v[x * d + y], v[y * d + x], r.modulus));
    rows.push_back(std::move(s));
  }
  return rank_mod_p(rows, d * (d + 1) / 2, r.modulus);
}

}  // namespace psi
