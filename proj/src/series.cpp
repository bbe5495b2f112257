#include "psi/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace psi {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("series coefficient overflow");
  return r;
}

}  // namespace

SeriesBound SeriesBound::total(int max_total) {
  if (max_total < 0)
    throw std::invalid_argument("negative degree bound");
  SeriesBound b;
  b.max_total_ = max_total;
  return b;
}

SeriesBound SeriesBound::per_coordinate(std::vector<int> caps) {
  if (caps.empty() || std::any_of(caps.begin(), caps.end(), [](int c) { return c < 0; }))
    throw std::invalid_argument("per-coordinate caps must be non-negative");
  SeriesBound b;
  b.caps_ = std::move(caps);
  b.max_total_ = 0;
  for (int c : b.caps_)
    b.max_total_ += c;
  return b;
}

bool SeriesBound::contains(const DegreeVector& a) const {
  if (std::any_of(a.begin(), a.end(), [](int v) { return v < 0; }))
    return false;
  if (caps_.empty())
    return total_degree(a) <= max_total_;
  if (a.size() != caps_.size())
    return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > caps_[k])
      return false;
  return true;
}

std::vector<DegreeVector> SeriesBound::enumerate(int n) const {
  if (!caps_.empty() && caps_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("per-coordinate caps have the wrong length");
  auto all = degree_vectors_up_to(n, max_total_);
  if (caps_.empty())
    return all;
  std::vector<DegreeVector> out;
  for (auto& a : all)
    if (contains(a))
      out.push_back(std::move(a));
  return out;
}

std::size_t DegreeVectorHash::operator()(const DegreeVector& a) const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : a) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

TruncatedSeries::TruncatedSeries(int n, SeriesBound bound) : n_(n), bound_(std::move(bound)) {
  if (n < 1)
    throw std::invalid_argument("series needs at least one variable");
  keys_ = bound_.enumerate(n);
  index_.reserve(keys_.size());
  for (std::size_t k = 0; k < keys_.size(); ++k)
    index_.emplace(keys_[k], k);
  coeffs_.assign(keys_.size(), 0);
}

TruncatedSeries TruncatedSeries::one(int n, SeriesBound bound) {
  TruncatedSeries s(n, std::move(bound));
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(int n, SeriesBound bound, int i) {
  TruncatedSeries s(n, std::move(bound));
  for (std::size_t k = 0; k < s.keys_.size(); ++k) {
    const auto& a = s.keys_[k];
    bool only_i = true;
    for (int v = 0; v < n; ++v)
      if (v != i - 1 && a[static_cast<std::size_t>(v)] != 0)
        only_i = false;
    if (only_i)
      s.coeffs_[k] = 1;
  }
  return s;
}

std::size_t TruncatedSeries::index_of(const DegreeVector& a) const {
  auto it = index_.find(a);
  if (it == index_.end())
    throw std::out_of_range("degree vector outside the series bound");
  return it->second;
}

std::int64_t TruncatedSeries::coefficient(const DegreeVector& a) const { return coeffs_[index_of(a)]; }

void TruncatedSeries::set(const DegreeVector& a, std::int64_t v) { coeffs_[index_of(a)] = v; }

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (n_ != o.n_ || !(bound_ == o.bound_))
    throw std::invalid_argument("series with different variables or bounds");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r = *this;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    r.coeffs_[k] = checked_add(coeffs_[k], o.coeffs_[k]);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(o);
  TruncatedSeries r(n_, bound_);
  DegreeVector sum(static_cast<std::size_t>(n_));
  for (std::size_t x = 0; x < keys_.size(); ++x) {
    if (coeffs_[x] == 0)
      continue;
    for (std::size_t y = 0; y < o.keys_.size(); ++y) {
      if (o.coeffs_[y] == 0)
        continue;
      for (std::size_t v = 0; v < sum.size(); ++v)
        sum[v] = keys_[x][v] + o.keys_[y][v];
      auto it = index_.find(sum);
      if (it == index_.end())
        continue;
      r.coeffs_[it->second] = checked_add(r.coeffs_[it->second], checked_mul(coeffs_[x], o.coeffs_[y]));
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0)
    throw std::invalid_argument("negative power");
  TruncatedSeries r = one(n_, bound_);
  for (int k = 0; k < e; ++k)
    r = r * *this;
  return r;
}

TruncatedSeries TruncatedSeries::times_one_plus_geometric_sum(int count) const {
  if (count > n_)
    throw std::invalid_argument("geometric sum over more variables than the series has");
  TruncatedSeries r = *this;
  DegreeVector b;
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    const auto& a = keys_[k];
    std::int64_t acc = coeffs_[k];
    for (int i = 0; i < count; ++i) {
      b = a;
      for (int j = 1; j <= a[static_cast<std::size_t>(i)]; ++j) {
        --b[static_cast<std::size_t>(i)];
        acc = checked_add(acc, coeffs_[index_.at(b)]);
      }
    }
    r.coeffs_[k] = acc;
  }
  return r;
}

TruncatedSeries TruncatedSeries::divided_by_one_minus(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("variable index out of range");
  TruncatedSeries r = *this;
  const auto axis = static_cast<std::size_t>(i - 1);
  DegreeVector b;
  // keys are sorted by total degree, so a - e_i is finished before a
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    const auto& a = keys_[k];
    if (a[axis] == 0)
      continue;
    b = a;
    --b[axis];
    r.coeffs_[k] = checked_add(r.coeffs_[k], r.coeffs_[index_.at(b)]);
  }
  return r;
}

std::vector<std::int64_t> TruncatedSeries::diagonal_sums() const {
  if (!bound_.is_total())
    throw std::invalid_argument("diagonal sums need a total-degree bound");
  std::vector<std::int64_t> out(static_cast<std::size_t>(bound_.max_total() + 1), 0);
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    auto d = static_cast<std::size_t>(total_degree(keys_[k]));
    out[d] = checked_add(out[d], coeffs_[k]);
  }
  return out;
}

namespace {

TruncatedSeries lee_like(int nvars, int power, const SeriesBound& bound) {
  if (power < 0)
    throw std::invalid_argument("negative exponent in Lee series");
  TruncatedSeries s = TruncatedSeries::one(nvars, bound);
  for (int k = 0; k < power; ++k)
    s = s.times_one_plus_geometric_sum(nvars);
  for (int i = 1; i <= nvars; ++i)
    s = s.divided_by_one_minus(i);
  return s;
}

}  // namespace

TruncatedSeries lee_series(int n, const SeriesBound& bound) {
  if (n < 3)
    throw std::invalid_argument("Lee series needs n >= 3");
  return lee_like(n, n - 3, bound);
}

TruncatedSeries lee_series_restricted(int n, int m, const SeriesBound& bound) {
  if (n < 2 || m < 0 || n + m < 3)
    throw std::invalid_argument("restricted Lee series needs n >= 2, m >= 0, n + m >= 3");
  return lee_like(n, n + m - 3, bound);
}

TruncatedSeries curve_module_series(int n, const SeriesBound& bound) {
  if (n < 4)
    throw std::invalid_argument("curve module series needs n >= 4");
  return lee_series(n - 1, bound).times_one_plus_geometric_sum(n - 1);
}

std::int64_t binomial_i64(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    // r * (n - k + t) is divisible by t at every step
    __int128 v = static_cast<__int128>(r) * (n - k + t) / t;
    if (v > INT64_MAX)
      throw std::overflow_error("binomial overflow");
    r = static_cast<std::int64_t>(v);
  }
  return r;
}

std::int64_t lee_coefficient(int power, const DegreeVector& a) {
  if (power < 0)
    throw std::invalid_argument("negative exponent");
  // multinomial(power; rest, k_1..k_n) = prod_i C(remaining_i, k_i)
  std::function<std::int64_t(std::size_t, int)> rec = [&](std::size_t i, int remaining) -> std::int64_t {
    if (i == a.size())
      return 1;
    std::int64_t acc = 0;
    int kmax = std::min(a[i], remaining);
    for (int k = 0; k <= kmax; ++k) {
      std::int64_t w = checked_mul(binomial_i64(remaining, k), binomial_i64(a[i], k));
      if (w == 0)
        continue;
      acc = checked_add(acc, checked_mul(w, rec(i + 1, remaining - k)));
    }
    return acc;
  };
  return rec(0, power);
}

std::vector<std::int64_t> poly_times(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                     int max_degree) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree + 1), 0);
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  return out;
}

std::vector<std::int64_t> series_inverse(const std::vector<std::int64_t>& a, int max_degree) {
  if (a.empty() || (a[0] != 1 && a[0] != -1))
    throw std::invalid_argument("series inverse needs constant term +-1");
  std::vector<std::int64_t> inv(static_cast<std::size_t>(max_degree + 1), 0);
  inv[0] = a[0];
  for (std::size_t k = 1; k < inv.size(); ++k) {
    std::int64_t acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j)
      acc = checked_add(acc, checked_mul(a[j], inv[k - j]));
    inv[k] = checked_mul(-acc, a[0]);
  }
  return inv;
}

std::vector<std::int64_t> total_hilbert(int n, int max_degree) {
  if (n < 3)
    throw std::invalid_argument("total Hilbert series needs n >= 3");
  std::vector<std::int64_t> num{1};
  for (int k = 0; k < n - 3; ++k)
    num = poly_times(num, {1, n - 1}, max_degree);
  std::vector<std::int64_t> den(static_cast<std::size_t>(max_degree + 1));
  for (int k = 0; k <= max_degree; ++k)
    den[static_cast<std::size_t>(k)] = binomial_i64(k + 2 * n - 4, 2 * n - 4);
  return poly_times(num, den, max_degree);
}

}  // namespace psi
