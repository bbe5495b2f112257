#include "psi/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace psi {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return Zp::from_raw(a, p).inverse().value(); }

namespace {

// row -= f * src, touching columns [from, ncols)
void axpy_mod(ModRow& row, std::uint32_t f, const ModRow& src, std::size_t from, std::uint32_t p) {
  const std::uint64_t neg = p - f;
  const std::size_t n = row.size();
  for (std::size_t c = from; c < n; ++c) {
    if (src[c] == 0)
      continue;
    row[c] = static_cast<std::uint32_t>((row[c] + neg * src[c]) % p);
  }
}

}  // namespace

void ModEchelon::reduce(ModRow& row) const {
  if (row.size() != ncols_)
    throw std::invalid_argument("row length does not match echelon width");
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    std::uint32_t f = row[pivots_[t]];
    if (f != 0)
      axpy_mod(row, f, rows_[t], pivots_[t], p_);
  }
}

bool ModEchelon::insert(ModRow row) {
  reduce(row);
  auto it = std::find_if(row.begin(), row.end(), [](std::uint32_t v) { return v != 0; });
  if (it == row.end())
    return false;
  auto piv = static_cast<std::size_t>(it - row.begin());
  std::uint32_t inv = inv_mod(row[piv], p_);
  for (std::size_t c = piv; c < ncols_; ++c)
    if (row[c] != 0)
      row[c] = mul_mod(row[c], inv, p_);
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

std::vector<ModRow> ModEchelon::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<ModRow> red;
  std::vector<std::size_t> piv;
  red.reserve(order.size());
  for (std::size_t k : order) {
    red.push_back(rows_[k]);
    piv.push_back(pivots_[k]);
  }
  // back substitution: clear each pivot column in all other rows
  for (std::size_t t = red.size(); t-- > 0;) {
    for (std::size_t s = 0; s < red.size(); ++s) {
      if (s == t)
        continue;
      std::uint32_t f = red[s][piv[t]];
      if (f != 0)
        axpy_mod(red[s], f, red[t], piv[t], p_);
    }
  }
  return red;
}

std::vector<ModRow> ModEchelon::nullspace() const {
  auto red = reduced_rows();
  std::vector<char> is_pivot(ncols_, 0);
  std::vector<std::size_t> piv;
  for (const auto& r : red) {
    auto it = std::find_if(r.begin(), r.end(), [](std::uint32_t v) { return v != 0; });
    piv.push_back(static_cast<std::size_t>(it - r.begin()));
    is_pivot[piv.back()] = 1;
  }
  std::vector<ModRow> basis;
  for (std::size_t free = 0; free < ncols_; ++free) {
    if (is_pivot[free])
      continue;
    ModRow v(ncols_, 0);
    v[free] = 1;
    for (std::size_t t = 0; t < red.size(); ++t)
      if (red[t][free] != 0)
        v[piv[t]] = p_ - red[t][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_mod_p(const std::vector<ModRow>& rows, std::size_t ncols, std::uint32_t p) {
  ModEchelon ech(ncols, p);
  for (const auto& r : rows) {
    ech.insert(r);
    if (ech.rank() == ncols)
      break;
  }
  return ech.rank();
}

std::size_t rank_rational(const DenseMatrix<Rational>& m) {
  if (m.empty())
    return 0;
  const std::size_t ncols = m.front().size();
  std::vector<std::vector<mpz_class>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != ncols)
      throw std::invalid_argument("ragged matrix");
    mpz_class l = 1;
    bool nonzero = false;
    for (const auto& q : row) {
      if (sgn(q) != 0) {
        nonzero = true;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      }
    }
    if (!nonzero)
      continue;
    std::vector<mpz_class> z(ncols);
    for (std::size_t c = 0; c < ncols; ++c)
      z[c] = row[c].get_num() * (l / row[c].get_den());
    a.push_back(std::move(z));
  }
  // fraction-free elimination; every entry stays a minor of the input
  std::size_t rank = 0;
  mpz_class prev = 1;
  const std::size_t nrows = a.size();
  mpz_class tmp;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && a[piv][col] == 0)
      ++piv;
    if (piv == nrows)
      continue;
    std::swap(a[piv], a[rank]);
    const mpz_class& pv = a[rank][col];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      auto& row = a[i];
      const mpz_class lead = row[col];
      for (std::size_t j = col + 1; j < ncols; ++j) {
        tmp = pv * row[j];
        if (lead != 0)
          tmp -= lead * a[rank][j];
        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const DenseMatrix<Rational>& m) { return rank_rational(m); }

std::size_t exact_rank(const DenseMatrix<Zp>& m) {
  if (m.empty())
    return 0;
  std::uint32_t p = 0;
  std::vector<ModRow> rows;
  rows.reserve(m.size());
  for (const auto& row : m) {
    ModRow r(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (p == 0)
        p = row[c].modulus();
      else if (row[c].modulus() != p)
        throw FieldError("matrix mixes prime fields");
      r[c] = row[c].value();
    }
    rows.push_back(std::move(r));
  }
  return rank_mod_p(rows, m.front().size(), p);
}

CrossCheckedRank cross_checked_rank(const DenseMatrix<Rational>& m, std::uint32_t p) {
  CrossCheckedRank out;
  std::vector<ModRow> rows;
  rows.reserve(m.size());
  for (const auto& row : m) {
    ModRow r(row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
      r[c] = reduce_mod(row[c], p).value();
    rows.push_back(std::move(r));
  }
  out.rank_mod_p = m.empty() ? 0 : rank_mod_p(rows, m.front().size(), p);
  out.rank_q = rank_rational(m);
  out.agree = out.rank_mod_p == out.rank_q;
  return out;
}

}  // namespace psi
