#ifndef PSI_LINALG_HPP
#define PSI_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "psi/scalar.hpp"

namespace psi {

template <class C>
using DenseMatrix = std::vector<std::vector<C>>;

using ModRow = std::vector<std::uint32_t>;

/// Incrementally built row echelon form over F_p. Each stored row is
/// monic at its pivot and vanishes at the pivots of all earlier rows,
/// so reducing a new row against the rows in insertion order clears
/// every existing pivot column.
class ModEchelon {
public:
  ModEchelon(std::size_t ncols, std::uint32_t p) : ncols_(ncols), p_(p) {}

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  std::uint32_t modulus() const { return p_; }

  /// Reduces `row` in place; returns true (and stores it) if it was
  /// independent of the rows already present.
  bool insert(ModRow row);

  /// Reduces a vector against the stored rows without inserting it.
  void reduce(ModRow& row) const;

  /// Basis of the right kernel {x : r.x = 0 for every stored row r}.
  std::vector<ModRow> nullspace() const;

  const std::vector<ModRow>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduced row echelon form of the stored rows (pivot columns cleared
  /// above as well as below), sorted by pivot.
  std::vector<ModRow> reduced_rows() const;

private:
  std::size_t ncols_;
  std::uint32_t p_;
  std::vector<ModRow> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank over F_p of a dense residue matrix.
std::size_t rank_mod_p(const std::vector<ModRow>& rows, std::size_t ncols, std::uint32_t p);

/// Rank over Q by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
std::size_t rank_rational(const DenseMatrix<Rational>& m);

std::size_t exact_rank(const DenseMatrix<Rational>& m);
std::size_t exact_rank(const DenseMatrix<Zp>& m);

/// Rank via F_p, then the same matrix over Q; `agree` reports whether the
/// two ranks matched.
struct CrossCheckedRank {
  std::size_t rank_mod_p = 0;
  std::size_t rank_q = 0;
  bool agree = true;
};
CrossCheckedRank cross_checked_rank(const DenseMatrix<Rational>& m, std::uint32_t p);

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace psi

#endif  // PSI_LINALG_HPP
