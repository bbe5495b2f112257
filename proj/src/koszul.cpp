#include "psi/koszul.hpp"

#include <algorithm>

#include "psi/linalg.hpp"
#include "psi/parallel.hpp"
#include "psi/series.hpp"

namespace psi {

namespace {

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int k = 0; k < e; ++k) {
    if (base != 0 && r > SIZE_MAX / base)
      return SIZE_MAX;
    r *= base;
  }
  return r;
}

// Linear map V (x) V -> (V (x) V) / R given as a dense q x d^2 matrix whose
// kernel is exactly R.
struct QuotientMap {
  std::size_t q = 0;
  std::vector<ModRow> rows;  // q rows of length d^2
};

QuotientMap quotient_map(const std::vector<ModRow>& relations, std::size_t d, std::uint32_t p) {
  ModEchelon ech(d * d, p);
  for (const auto& r : relations)
    ech.insert(r);
  auto red = ech.reduced_rows();
  std::vector<std::size_t> piv;
  std::vector<char> is_pivot(d * d, 0);
  for (const auto& r : red) {
    auto it = std::find_if(r.begin(), r.end(), [](std::uint32_t v) { return v != 0; });
    piv.push_back(static_cast<std::size_t>(it - r.begin()));
    is_pivot[piv.back()] = 1;
  }
  QuotientMap out;
  for (std::size_t c = 0; c < d * d; ++c) {
    if (is_pivot[c])
      continue;
    ModRow row(d * d, 0);
    row[c] = 1;
    for (std::size_t t = 0; t < red.size(); ++t)
      if (red[t][c] != 0)
        row[piv[t]] = p - red[t][c];
    out.rows.push_back(std::move(row));
  }
  out.q = out.rows.size();
  return out;
}

void check_budget(std::size_t d, int k, std::size_t max_columns) {
  std::size_t need = ipow(d, k);
  if (need > max_columns)
    throw BudgetExceeded("dim V^" + std::to_string(k) + " exceeds the column budget of " +
                             std::to_string(max_columns),
                         need);
}

}  // namespace

std::vector<std::size_t> intersection_dimensions(const std::vector<ModRow>& relations, std::size_t d, int kmax,
                                                 const KoszulOptions& opts) {
  if (kmax < 0)
    throw UsageError("kmax must be non-negative");
  for (int k = 0; k <= kmax; ++k)
    check_budget(d, k, opts.max_columns);
  const std::uint32_t p = opts.prime;
  std::vector<std::size_t> dims;
  dims.push_back(1);
  if (kmax >= 1)
    dims.push_back(d);
  if (kmax < 2)
    return dims;

  QuotientMap qm = quotient_map(relations, d, p);
  const std::size_t q = qm.q;
  // qv[v][c][x] = Q[c][x*d + v]
  std::vector<std::vector<ModRow>> qv(d, std::vector<ModRow>(q, ModRow(d)));
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t x = 0; x < d; ++x)
        qv[v][c][x] = qm.rows[c][x * d + v];

  // K_1 = V
  std::vector<ModRow> basis;
  for (std::size_t x = 0; x < d; ++x) {
    ModRow e(d, 0);
    e[x] = 1;
    basis.push_back(std::move(e));
  }

  for (int k = 2; k <= kmax; ++k) {
    const std::size_t prev_len = ipow(d, k - 1);
    const std::size_t w_count = ipow(d, k - 2);
    const std::size_t ncols = basis.size() * d;
    // column (b, v) of the constraint matrix: (id (x) Q)(basis[b] (x) e_v)
    auto columns = parallel_map(opts.threads, ncols, [&](std::size_t col) {
      const auto& b = basis[col / d];
      const auto& qvv = qv[col % d];
      ModRow out(w_count * q, 0);
      for (std::size_t w = 0; w < w_count; ++w) {
        const std::uint32_t* bw = b.data() + w * d;
        for (std::size_t c = 0; c < q; ++c) {
          std::uint64_t acc = 0;
          for (std::size_t x = 0; x < d; ++x)
            if (bw[x] != 0 && qvv[c][x] != 0)
              acc = (acc + std::uint64_t{bw[x]} * qvv[c][x]) % p;
          out[w * q + c] = static_cast<std::uint32_t>(acc);
        }
      }
      return out;
    });
    ModEchelon ech(ncols, p);
    for (std::size_t r = 0; r < w_count * q; ++r) {
      ModRow row(ncols);
      bool nonzero = false;
      for (std::size_t c = 0; c < ncols; ++c) {
        row[c] = columns[c][r];
        nonzero |= row[c] != 0;
      }
      if (nonzero)
        ech.insert(std::move(row));
      if (ech.rank() == ncols)
        break;
    }
    dims.push_back(ncols - ech.rank());
    if (k == kmax)
      break;
    auto kernel = ech.nullspace();
    std::vector<ModRow> next = parallel_map(opts.threads, kernel.size(), [&](std::size_t t) {
      const auto& c = kernel[t];
      ModRow y(prev_len * d, 0);
      for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        for (std::size_t v = 0; v < d; ++v) {
          std::uint32_t f = c[bi * d + v];
          if (f == 0)
            continue;
          const auto& b = basis[bi];
          for (std::size_t u = 0; u < prev_len; ++u)
            if (b[u] != 0)
              y[u * d + v] = add_mod(y[u * d + v], mul_mod(f, b[u], p), p);
        }
      }
      return y;
    });
    basis = std::move(next);
  }
  return dims;
}

std::size_t stacked_intersection_dimension(const std::vector<ModRow>& relations, std::size_t d, int k,
                                           const std::vector<int>& slots, std::uint32_t p,
                                           std::size_t max_columns) {
  check_budget(d, k, max_columns);
  const std::size_t total = ipow(d, k);
  if (k < 2 || slots.empty())
    return total;
  QuotientMap qm = quotient_map(relations, d, p);
  ModEchelon ech(total, p);
  for (int s : slots) {
    if (s < 0 || s > k - 2)
      throw UsageError("constraint slot out of range");
    const std::size_t left = ipow(d, s);
    const std::size_t right = ipow(d, k - 2 - s);
    for (std::size_t w1 = 0; w1 < left; ++w1)
      for (std::size_t c = 0; c < qm.q; ++c)
        for (std::size_t w2 = 0; w2 < right; ++w2) {
          ModRow row(total, 0);
          for (std::size_t xy = 0; xy < d * d; ++xy)
            if (qm.rows[c][xy] != 0)
              row[(w1 * d * d + xy) * right + w2] = qm.rows[c][xy];
          ech.insert(std::move(row));
        }
  }
  return total - ech.rank();
}

std::size_t dual_dimension(int n, int k, const KoszulOptions& opts) {
  if (k < 0)
    throw UsageError("degree must be non-negative");
  auto r = tensor_relation_space(n, opts.prime);
  return intersection_dimensions(r.basis(), r.dim_v, k, opts).back();
}

std::vector<std::int64_t> koszul_prediction(int n, int kmax) {
  auto h = total_hilbert(n, kmax);
  for (std::size_t k = 1; k < h.size(); k += 2)
    h[k] = -h[k];
  return series_inverse(h, kmax);
}

std::vector<std::int64_t> koszul_prediction_closed_form(int n, int kmax) {
  if (n < 3)
    throw UsageError("Koszul prediction needs n >= 3");
  std::vector<std::int64_t> num(static_cast<std::size_t>(2 * n - 2));
  for (int k = 0; k <= 2 * n - 3; ++k)
    num[static_cast<std::size_t>(k)] = binomial_i64(2 * n - 3, k);
  // 1 / (1 - (n-1)t)^(n-3) = sum_k C(k + n - 4, n - 4) (n-1)^k t^k
  std::vector<std::int64_t> den(static_cast<std::size_t>(kmax + 1), 0);
  if (n == 3) {
    den[0] = 1;
  } else {
    std::int64_t pw = 1;
    for (int k = 0; k <= kmax; ++k) {
      den[static_cast<std::size_t>(k)] = binomial_i64(k + n - 4, n - 4) * pw;
      pw *= n - 1;
    }
  }
  return poly_times(num, den, kmax);
}

KoszulReport koszul_report(int n, int kmax, const KoszulOptions& opts) {
  if (n < 3)
    throw UsageError("Koszul numerics need n >= 3");
  KoszulReport rep;
  rep.n = n;
  rep.kmax = kmax;
  auto r = tensor_relation_space(n, opts.prime);
  rep.dim_r = r.dim();
  auto pred = koszul_prediction(n, std::max(kmax, 2));
  rep.b2_identity = pred[2] == static_cast<std::int64_t>(rep.dim_r);

  auto dims = intersection_dimensions(r.basis(), r.dim_v, kmax, opts);
  bool mismatch = false;
  for (int k = 0; k <= kmax; ++k)
    mismatch |= static_cast<std::int64_t>(dims[static_cast<std::size_t>(k)]) != pred[static_cast<std::size_t>(k)];
  if (mismatch) {
    // kernels can only grow at a bad prime: keep the smallest dimension seen
    for (auto p : opts.retry_primes) {
      KoszulOptions o = opts;
      o.prime = p;
      auto rp = tensor_relation_space(n, p);
      auto again = intersection_dimensions(rp.basis(), rp.dim_v, kmax, o);
      for (std::size_t k = 0; k < dims.size(); ++k)
        dims[k] = std::min(dims[k], again[k]);
    }
  }
  for (int k = 0; k <= kmax; ++k) {
    KoszulRow row;
    row.k = k;
    row.dual_dim = dims[static_cast<std::size_t>(k)];
    row.predicted = pred[static_cast<std::size_t>(k)];
    row.match = static_cast<std::int64_t>(row.dual_dim) == row.predicted;
    if (!row.match && !rep.first_discrepancy)
      rep.first_discrepancy = k;
    rep.rows.push_back(row);
  }
  if (rep.first_discrepancy) {
    const auto& bad = rep.rows[static_cast<std::size_t>(*rep.first_discrepancy)];
    rep.verdict = "discrepancy at degree " + std::to_string(bad.k) + ": dual dimension " +
                  std::to_string(bad.dual_dim) + ", predicted " + std::to_string(bad.predicted);
  } else {
    rep.verdict = "consistent with Koszulness up to degree " + std::to_string(kmax);
  }
  return rep;
}

}  // namespace psi
