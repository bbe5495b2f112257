#ifndef PSI_CHECKS_HPP
#define PSI_CHECKS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "psi/presentation.hpp"
#include "psi/report.hpp"

namespace psi {

/// Settings shared by every check builder. Nothing here other than
/// `threads` may influence how work is split, and threads never reaches
/// the report, so reports are byte-identical across thread counts.
struct CheckOptions {
  std::size_t threads = 1;
  /// Work over F_prime only (no rational re-verification of slice ranks,
  /// configurations sampled in F_prime).
  bool prime_field = false;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  std::size_t singular_budget = 200'000;
  std::size_t koszul_max_columns = 1'000'000;
  bool tables = true;
};

/// Generator for one named task: the stream depends on the seed and the
/// label only, never on scheduling.
std::mt19937_64 task_rng(std::uint64_t seed, const std::string& label);

Json config_echo(const CheckOptions& o);

/// Brute-force graded dimensions against the Lee series (restricted
/// version for B_{n,m}) on all degree vectors of total degree <= D.
void add_hilbert_identity(Report& r, const PresentationSpec& spec, int max_total, const CheckOptions& o);

/// Coefficients at e_i and e_i + e_j, and the all-ones table for n = 3.
void add_pointwise_anchors(Report& r, int n, const CheckOptions& o);

/// B_{2,2}: dim in degree (a, b) is a + b + 1.
void add_conifold(Report& r, int max_total, const CheckOptions& o);

void add_curve_module(Report& r, int n, int max_total, const CheckOptions& o);

/// Standard monomials of a Groebner basis vs graded_dim vs Lee.
void add_groebner_triple(Report& r, int n, int max_total, const CheckOptions& o);
void add_krull(Report& r, const PresentationSpec& spec, std::size_t expected, const CheckOptions& o);

void add_vanishing(Report& r, const PresentationSpec& spec, int count, const CheckOptions& o);
void add_random_points(Report& r, const PresentationSpec& spec, int count, const CheckOptions& o);
void add_jacobian_ranks(Report& r, const PresentationSpec& spec, int count, const CheckOptions& o);
void add_singular_locus(Report& r, const PresentationSpec& spec, const CheckOptions& o);

void add_b2_identities(Report& r, int nmin, int nmax, const CheckOptions& o);
void add_koszul(Report& r, int n, int kmax, const CheckOptions& o);

/// Full report for acceptance criterion 1..8.
Report acceptance_report(int criterion, const CheckOptions& o);
const char* acceptance_title(int criterion);

}  // namespace psi

#endif  // PSI_CHECKS_HPP
