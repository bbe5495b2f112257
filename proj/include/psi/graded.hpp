#ifndef PSI_GRADED_HPP
#define PSI_GRADED_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "psi/linalg.hpp"
#include "psi/presentation.hpp"

namespace psi {

/// Z^n multidegree (a_1, ..., a_n), all entries non-negative.
using DegreeVector = std::vector<int>;

int total_degree(const DegreeVector& a);
DegreeVector unit_vector(int n, int i);  // e_i, 1-based i

/// All a in N^n with |a| <= max_total, sorted by total degree and then
/// lexicographically.
std::vector<DegreeVector> degree_vectors_up_to(int n, int max_total);

/// Monomials of multidegree a, strictly increasing in the ring's order.
std::vector<Monomial> enumerate_monomials(const Ring& ring, const DegreeVector& a);
inline std::vector<Monomial> enumerate_monomials(const PresentationSpec& spec, const DegreeVector& a) {
  return enumerate_monomials(*spec.ring, a);
}

/// prod_i C(a_i + d_i - 1, d_i - 1) with d_i the size of block i.
std::size_t monomial_count(const Ring& ring, const DegreeVector& a);

/// Degree-a piece of the relation ideal: one row per product of a
/// relation of degree e_i + e_j with a monomial of degree a - e_i - e_j.
struct SliceMatrix {
  std::vector<Monomial> columns;
  DenseMatrix<Rational> rows;
};

SliceMatrix build_slice(const PresentationSpec& spec, const DegreeVector& a);

struct RankPolicy {
  std::uint32_t prime = kDefaultPrime;
  /// Slices with at most this many columns are re-ranked over Q.
  std::size_t verify_max_cols = 2000;
};

struct GradedDim {
  std::size_t dim = 0;
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::size_t rank = 0;
  bool verified_q = false;
  /// The prime disagreed with Q (rank dropped mod p); the Q rank is used.
  bool bad_prime = false;
};

GradedDim graded_dim_detail(const PresentationSpec& spec, const DegreeVector& a,
                            const RankPolicy& policy = {});

/// #monomials(a) - rank(slice(a)).
std::size_t graded_dim(const PresentationSpec& spec, const DegreeVector& a, const RankPolicy& policy = {});

}  // namespace psi

#endif  // PSI_GRADED_HPP
