#ifndef PSI_KOSZUL_HPP
#define PSI_KOSZUL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psi/presentation.hpp"

namespace psi {

/// Refusal for computations larger than the configured budget. `required`
/// is the size that would have been needed.
class BudgetExceeded : public UsageError {
public:
  BudgetExceeded(const std::string& what, std::size_t required)
      : UsageError(what + " (needs " + std::to_string(required) + ")"), required_(required) {}
  std::size_t required() const { return required_; }

private:
  std::size_t required_;
};

struct KoszulOptions {
  std::uint32_t prime = kDefaultPrime;
  /// Upper bound on dim V^k, the ambient dimension of the last step.
  std::size_t max_columns = 1'000'000;
  std::size_t threads = 1;
  /// Primes used to re-run a degree whose dimension disagrees with the
  /// prediction.
  std::vector<std::uint32_t> retry_primes = {2147483647u, 4294967279u};
};

/// dim of the intersection of V^{s} (x) R (x) V^{k-2-s} over s = 0..k-2 inside
/// V^{(x)k}, for k = 0..kmax, where R is spanned by `relations` (vectors in
/// V (x) V indexed x * dimV + y). Computed one degree at a time:
///   K_k = (K_{k-1} (x) V) cap (V^{(x)k-2} (x) R).
std::vector<std::size_t> intersection_dimensions(const std::vector<ModRow>& relations, std::size_t dim_v,
                                                 int kmax, const KoszulOptions& opts = {});

/// Same intersection for a single k, restricted to the constraint slots
/// listed (each s in [0, k-2]), by stacking the quotient projections of all
/// slots into one matrix over V^{(x)k}. Independent of the degree-by-degree
/// route; meant for small sizes.
std::size_t stacked_intersection_dimension(const std::vector<ModRow>& relations, std::size_t dim_v, int k,
                                           const std::vector<int>& slots, std::uint32_t p,
                                           std::size_t max_columns = 1'000'000);

/// dim A^!_k for the quadratic dual of A_n.
std::size_t dual_dimension(int n, int k, const KoszulOptions& opts = {});

/// Coefficients b_0..b_kmax of 1 / h_A(-t), by inverting the total
/// Hilbert series.
std::vector<std::int64_t> koszul_prediction(int n, int kmax);
/// The same coefficients from (1 + t)^(2n-3) / (1 - (n-1)t)^(n-3).
std::vector<std::int64_t> koszul_prediction_closed_form(int n, int kmax);

struct KoszulRow {
  int k = 0;
  std::size_t dual_dim = 0;
  std::int64_t predicted = 0;
  bool match = false;
};

struct KoszulReport {
  int n = 0;
  int kmax = 0;
  std::vector<KoszulRow> rows;
  /// b_2 == dim R (holds for every quadratic algebra).
  bool b2_identity = false;
  std::size_t dim_r = 0;
  std::optional<int> first_discrepancy;
  std::string verdict;
};

KoszulReport koszul_report(int n, int kmax, const KoszulOptions& opts = {});

}  // namespace psi

#endif  // PSI_KOSZUL_HPP
