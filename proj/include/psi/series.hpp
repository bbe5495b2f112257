#ifndef PSI_SERIES_HPP
#define PSI_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "psi/graded.hpp"

namespace psi {

/// Which exponent vectors a truncated series keeps. Both kinds are
/// closed under decreasing any coordinate.
class SeriesBound {
public:
  static SeriesBound total(int max_total);
  static SeriesBound per_coordinate(std::vector<int> caps);

  bool contains(const DegreeVector& a) const;
  /// Every vector in the bound for n variables, sorted by total degree
  /// and then lexicographically.
  std::vector<DegreeVector> enumerate(int n) const;

  bool is_total() const { return caps_.empty(); }
  int max_total() const { return max_total_; }
  friend bool operator==(const SeriesBound&, const SeriesBound&) = default;

private:
  int max_total_ = 0;
  std::vector<int> caps_;
};

struct DegreeVectorHash {
  std::size_t operator()(const DegreeVector& a) const;
};

/// Power series in q_1..q_n with integer coefficients, truncated to a
/// bound. Every operation truncates eagerly at that bound. Coefficients
/// are 64-bit; overflow throws std::overflow_error.
class TruncatedSeries {
public:
  TruncatedSeries(int n, SeriesBound bound);

  static TruncatedSeries one(int n, SeriesBound bound);
  /// 1 / (1 - q_i), 1-based i.
  static TruncatedSeries geometric(int n, SeriesBound bound, int i);

  int num_vars() const { return n_; }
  const SeriesBound& bound() const { return bound_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<DegreeVector>& keys() const { return keys_; }

  /// Throws std::out_of_range outside the bound.
  std::int64_t coefficient(const DegreeVector& a) const;
  std::int64_t coefficient_at(std::size_t index) const { return coeffs_[index]; }
  void set(const DegreeVector& a, std::int64_t v);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries pow(int e) const;

  /// this * (1 + sum_{i <= count} q_i / (1 - q_i)) via running sums along
  /// each axis.
  TruncatedSeries times_one_plus_geometric_sum(int count) const;
  /// this / (1 - q_i): prefix sums along axis i.
  TruncatedSeries divided_by_one_minus(int i) const;

  /// Sums of coefficients grouped by total degree (total bounds only).
  std::vector<std::int64_t> diagonal_sums() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.n_ == b.n_ && a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
  }

private:
  std::size_t index_of(const DegreeVector& a) const;
  void check_compatible(const TruncatedSeries& o) const;

  int n_;
  SeriesBound bound_;
  std::vector<DegreeVector> keys_;
  std::unordered_map<DegreeVector, std::size_t, DegreeVectorHash> index_;
  std::vector<std::int64_t> coeffs_;
};

/// (1 + sum q_i/(1-q_i))^(n-3) / prod (1-q_i), expanded by series
/// arithmetic.
TruncatedSeries lee_series(int n, const SeriesBound& bound);

/// Lee series for n + m points with the last m variables set to zero:
/// (1 + sum_{i<=n} q_i/(1-q_i))^(n+m-3) / prod_{i<=n} (1-q_i).
TruncatedSeries lee_series_restricted(int n, int m, const SeriesBound& bound);

/// (1 + sum_{i<=n-1} q_i/(1-q_i)) * lee_series(n-1): Hilbert series of the
/// universal affine curve over the (n-1)-point space, as a module.
TruncatedSeries curve_module_series(int n, const SeriesBound& bound);

/// Independent closed-form evaluator for the coefficient at a of
/// (1 + sum q_i/(1-q_i))^power / prod (1-q_i):
///   sum_k multinomial(power; k_0, k_1..k_n) prod_i C(a_i, k_i).
std::int64_t lee_coefficient(int power, const DegreeVector& a);

/// Total-degree Hilbert series of A_n up to t^D, from
/// (1 + (n-1)t)^(n-3) / (1-t)^(2n-3).
std::vector<std::int64_t> total_hilbert(int n, int max_degree);

/// Univariate helpers on coefficient lists c[0..D].
std::vector<std::int64_t> poly_times(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                     int max_degree);
/// 1 / a(t) truncated at t^D; a(0) must be +-1.
std::vector<std::int64_t> series_inverse(const std::vector<std::int64_t>& a, int max_degree);

std::int64_t binomial_i64(std::int64_t n, std::int64_t k);

}  // namespace psi

#endif  // PSI_SERIES_HPP
