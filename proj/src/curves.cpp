#include "psi/curves.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "psi/koszul.hpp"
#include "psi/series.hpp"

namespace psi {

IntegerConfig sample_integer_config(int n, int m, std::mt19937_64& rng) {
  if (n < 1 || m < 0)
    throw UsageError("configuration needs n >= 1 and m >= 0");
  const std::int64_t range = 3 * (n + m) + 3;
  std::vector<std::int64_t> pool;
  for (std::int64_t v = -range; v <= range; ++v)
    pool.push_back(v);
  // partial Fisher-Yates with our own index draws, so results do not
  // depend on the standard library's shuffle implementation
  const auto need = static_cast<std::size_t>(n + m);
  for (std::size_t k = 0; k < need; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, pool.size() - 1);
    std::swap(pool[k], pool[pick(rng)]);
  }
  IntegerConfig out;
  out.z.assign(pool.begin(), pool.begin() + n);
  out.q.assign(pool.begin() + n, pool.begin() + static_cast<std::ptrdiff_t>(need));
  std::uniform_int_distribution<int> lam(1, 10);
  for (int i = 0; i < n; ++i) {
    int v = lam(rng);
    out.lambda.push_back(v <= 5 ? v : 5 - v);  // 1..5, -1..-5
  }
  return out;
}

std::size_t minor_count(std::size_t rows, std::size_t cols, std::size_t c) {
  auto choose = [](std::size_t a, std::size_t b) -> std::size_t {
    if (b > a)
      return 0;
    return static_cast<std::size_t>(binomial_i64(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)));
  };
  std::size_t x = choose(rows, c), y = choose(cols, c);
  if (y != 0 && x > SIZE_MAX / y)
    return SIZE_MAX;
  return x * y;
}

namespace {

// Laplace expansion along the first row.
PPoly determinant(const std::vector<std::vector<const PPoly*>>& m, const RingPtr& ring, std::uint32_t p) {
  const std::size_t c = m.size();
  if (c == 0)
    return PPoly::constant(ring, Zp::from_raw(1, p));
  if (c == 1)
    return *m[0][0];
  PPoly acc(ring);
  for (std::size_t col = 0; col < c; ++col) {
    if (m[0][col]->is_zero())
      continue;
    std::vector<std::vector<const PPoly*>> sub;
    for (std::size_t r = 1; r < c; ++r) {
      std::vector<const PPoly*> row;
      for (std::size_t k = 0; k < c; ++k)
        if (k != col)
          row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    PPoly term = *m[0][col] * determinant(sub, ring, p);
    if (col % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t t = k; t-- > 0;) {
    if (idx[t] < n - k + t) {
      ++idx[t];
      for (std::size_t u = t + 1; u < k; ++u)
        idx[u] = idx[u - 1] + 1;
      return true;
    }
  }
  return false;
}

// Linearly independent subset spanning the same space (all inputs are
// homogeneous of one degree, so this loses nothing).
std::vector<PPoly> linear_basis(const std::vector<PPoly>& polys, std::uint32_t p) {
  std::map<Monomial, std::size_t, bool (*)(const Monomial&, const Monomial&)> cols(
      [](const Monomial& a, const Monomial& b) { return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(), b.exponents().end()); });
  for (const auto& f : polys)
    for (const auto& t : f.terms())
      cols.emplace(t.mono, 0);
  std::vector<Monomial> monos;
  for (auto& [mono, idx] : cols) {
    idx = monos.size();
    monos.push_back(mono);
  }
  ModEchelon ech(monos.size(), p);
  for (const auto& f : polys) {
    ModRow row(monos.size(), 0);
    for (const auto& t : f.terms())
      row[cols.at(t.mono)] = t.coeff.value();
    ech.insert(std::move(row));
  }
  std::vector<PPoly> out;
  if (polys.empty())
    return out;
  const RingPtr& ring = polys.front().ring();
  for (const auto& row : ech.reduced_rows()) {
    std::vector<Term<Zp>> terms;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0)
        terms.push_back({monos[k], Zp::from_raw(row[k], p)});
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

}  // namespace

std::size_t expected_codimension(const PresentationSpec& spec, std::uint32_t p) {
  if (spec.kind == AlgebraKind::An)
    return static_cast<std::size_t>((spec.n - 1) * (spec.n - 3));
  if (spec.relations.empty())
    return 0;
  auto gb = buchberger(relations_over(spec, PrimeField(p)));
  return spec.num_vars() - krull_dimension(gb);
}

SingularLocusResult singular_locus_dim(const PresentationSpec& spec, std::size_t c, std::size_t budget,
                                       std::uint32_t p) {
  const std::size_t nrel = spec.relations.size();
  const std::size_t nvar = spec.num_vars();
  SingularLocusResult res;
  res.codimension = c;
  res.minors = minor_count(nrel, nvar, c);
  if (res.minors > budget)
    throw BudgetExceeded("singular locus of " + spec.label() + ": " + std::to_string(c) + "x" + std::to_string(c) +
                             " minors exceed the budget of " + std::to_string(budget),
                         res.minors);
  PrimeField field(p);
  auto rels = relations_over(spec, field);
  std::vector<std::vector<PPoly>> jac(nrel);
  for (std::size_t r = 0; r < nrel; ++r)
    for (std::size_t k = 0; k < nvar; ++k)
      jac[r].push_back(rels[r].derivative(k));

  std::vector<PPoly> minors;
  if (c == 0) {
    minors.push_back(PPoly::constant(spec.ring, field.one()));
  } else if (c <= nrel && c <= nvar) {
    std::vector<std::size_t> ri(c), ci(c);
    std::iota(ri.begin(), ri.end(), 0);
    do {
      std::iota(ci.begin(), ci.end(), 0);
      do {
        std::vector<std::vector<const PPoly*>> sub(c);
        for (std::size_t a = 0; a < c; ++a)
          for (std::size_t b = 0; b < c; ++b)
            sub[a].push_back(&jac[ri[a]][ci[b]]);
        auto d = determinant(sub, spec.ring, p);
        if (!d.is_zero())
          minors.push_back(std::move(d));
      } while (next_combination(ci, nvar));
    } while (next_combination(ri, nrel));
  }
  minors = linear_basis(minors, p);
  res.independent_minors = minors.size();

  std::vector<PPoly> gens = rels;
  gens.insert(gens.end(), minors.begin(), minors.end());
  std::erase_if(gens, [](const PPoly& f) { return f.is_zero(); });
  if (gens.empty()) {
    // no equations at all: the whole affine space
    res.dimension = nvar;
    return res;
  }
  auto gb = buchberger(std::move(gens));
  res.basis_size = gb.gens.size();
  if (gb.contains_unit()) {
    res.empty = true;
    return res;
  }
  res.dimension = krull_dimension(gb);
  return res;
}

}  // namespace psi
