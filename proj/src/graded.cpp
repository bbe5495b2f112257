#include "psi/graded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace psi {

int total_degree(const DegreeVector& a) { return std::accumulate(a.begin(), a.end(), 0); }

DegreeVector unit_vector(int n, int i) {
  DegreeVector e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(i - 1)) = 1;
  return e;
}

namespace {

void compositions(int remaining, std::size_t slot, DegreeVector& cur, std::vector<DegreeVector>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[slot] = v;
    compositions(remaining - v, slot + 1, cur, out);
  }
}

// all ways to write `total` as an ordered sum of `parts` non-negative ints
std::vector<DegreeVector> compositions_of(int total, std::size_t parts) {
  std::vector<DegreeVector> out;
  if (parts == 0) {
    if (total == 0)
      out.emplace_back();
    return out;
  }
  DegreeVector cur(parts, 0);
  compositions(total, 0, cur, out);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  std::size_t r = 1;
  for (std::size_t t = 1; t <= k; ++t)
    r = r * (n - k + t) / t;
  return r;
}

}  // namespace

std::vector<DegreeVector> degree_vectors_up_to(int n, int max_total) {
  std::vector<DegreeVector> out;
  for (int d = 0; d <= max_total; ++d) {
    auto part = compositions_of(d, static_cast<std::size_t>(n));
    std::sort(part.begin(), part.end());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t monomial_count(const Ring& ring, const DegreeVector& a) {
  std::size_t count = 1;
  for (int b = 0; b < ring.num_blocks(); ++b) {
    auto d = static_cast<std::size_t>(ring.block_size(b));
    auto ab = static_cast<std::size_t>(a[static_cast<std::size_t>(b)]);
    if (d == 0) {
      if (ab != 0)
        return 0;
      continue;
    }
    count *= binomial(ab + d - 1, d - 1);
  }
  return count;
}

std::vector<Monomial> enumerate_monomials(const Ring& ring, const DegreeVector& a) {
  if (a.size() != static_cast<std::size_t>(ring.num_blocks()))
    throw std::invalid_argument("degree vector has wrong block count");
  if (std::any_of(a.begin(), a.end(), [](int v) { return v < 0; }))
    return {};

  std::vector<std::vector<std::size_t>> block_vars(static_cast<std::size_t>(ring.num_blocks()));
  for (std::size_t k = 0; k < ring.num_vars(); ++k)
    block_vars[static_cast<std::size_t>(ring.block_of(k))].push_back(k);

  std::vector<std::vector<Exponent>> partial{std::vector<Exponent>(ring.num_vars(), 0)};
  for (std::size_t b = 0; b < block_vars.size(); ++b) {
    auto choices = compositions_of(a[b], block_vars[b].size());
    std::vector<std::vector<Exponent>> next;
    next.reserve(partial.size() * choices.size());
    for (const auto& base : partial) {
      for (const auto& c : choices) {
        auto e = base;
        for (std::size_t t = 0; t < c.size(); ++t)
          e[block_vars[b][t]] = static_cast<Exponent>(c[t]);
        next.push_back(std::move(e));
      }
    }
    partial = std::move(next);
  }

  std::vector<Monomial> out;
  out.reserve(partial.size());
  for (auto& e : partial)
    out.push_back(ring.monomial(std::move(e)));
  const auto& ord = ring.order();
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return ord.less(x, y); });
  return out;
}

SliceMatrix build_slice(const PresentationSpec& spec, const DegreeVector& a) {
  SliceMatrix s;
  s.columns = enumerate_monomials(spec, a);
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (std::size_t c = 0; c < s.columns.size(); ++c)
    col.emplace(s.columns[c], c);

  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    DegreeVector rest = a;
    --rest[static_cast<std::size_t>(spec.pairs[r].i - 1)];
    --rest[static_cast<std::size_t>(spec.pairs[r].j - 1)];
    if (std::any_of(rest.begin(), rest.end(), [](int v) { return v < 0; }))
      continue;
    for (const auto& u : enumerate_monomials(spec, rest)) {
      std::vector<Rational> row(s.columns.size(), Rational(0));
      for (const auto& t : spec.relations[r].terms())
        row[col.at(t.mono * u)] += t.coeff;
      s.rows.push_back(std::move(row));
    }
  }
  return s;
}

namespace {

std::size_t slice_rank_mod(const SliceMatrix& s, std::uint32_t p) {
  std::vector<ModRow> rows;
  rows.reserve(s.rows.size());
  for (const auto& row : s.rows) {
    ModRow m(row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
      m[c] = sgn(row[c]) == 0 ? 0 : reduce_mod(row[c], p).value();
    rows.push_back(std::move(m));
  }
  return rank_mod_p(rows, s.columns.size(), p);
}

}  // namespace

GradedDim graded_dim_detail(const PresentationSpec& spec, const DegreeVector& a, const RankPolicy& policy) {
  GradedDim out;
  auto slice = build_slice(spec, a);
  out.columns = slice.columns.size();
  out.rows = slice.rows.size();
  out.rank = slice_rank_mod(slice, policy.prime);
  if (out.columns <= policy.verify_max_cols) {
    std::size_t q = rank_rational(slice.rows);
    out.verified_q = true;
    if (q != out.rank) {
      out.bad_prime = true;
      out.rank = q;
    }
  }
  out.dim = out.columns - out.rank;
  return out;
}

std::size_t graded_dim(const PresentationSpec& spec, const DegreeVector& a, const RankPolicy& policy) {
  return graded_dim_detail(spec, a, policy).dim;
}

}  // namespace psi
