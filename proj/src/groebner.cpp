#include "psi/groebner.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace psi {

namespace {

using Mask = std::uint64_t;

// Smallest set of variables meeting every support (branch and bound).
class HittingSet {
public:
  explicit HittingSet(std::vector<Mask> supports) : supports_(std::move(supports)) {}

  int solve(std::size_t num_vars) {
    best_ = static_cast<int>(num_vars);
    search(0, 0);
    return best_;
  }

private:
  void search(Mask chosen, int size) {
    if (size >= best_)
      return;
    const Mask* unhit = nullptr;
    for (const auto& s : supports_) {
      if ((s & chosen) == 0 && (unhit == nullptr || std::popcount(s) < std::popcount(*unhit)))
        unhit = &s;
    }
    if (unhit == nullptr) {
      best_ = size;
      return;
    }
    // some variable of the smallest unhit support must be chosen
    for (Mask s = *unhit; s != 0; s &= s - 1)
      search(chosen | (s & (~s + 1)), size + 1);
  }

  std::vector<Mask> supports_;
  int best_ = 0;
};

}  // namespace

std::size_t monomial_ideal_dimension(std::span<const Monomial> generators, std::size_t num_vars) {
  if (num_vars > 64)
    throw UsageError("monomial ideal dimension supports at most 64 variables");
  std::vector<Mask> supports;
  for (const auto& m : generators) {
    Mask s = 0;
    for (std::size_t k = 0; k < m.num_vars(); ++k)
      if (m[k] != 0)
        s |= Mask{1} << k;
    if (s == 0)
      return 0;  // unit ideal; callers report it separately
    supports.push_back(s);
  }
  // keep only inclusion-minimal supports
  std::sort(supports.begin(), supports.end(),
            [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  std::vector<Mask> minimal;
  for (Mask s : supports) {
    bool redundant = false;
    for (Mask t : minimal)
      if ((t & s) == t) {
        redundant = true;
        break;
      }
    if (!redundant)
      minimal.push_back(s);
  }
  HittingSet hs(std::move(minimal));
  return num_vars - static_cast<std::size_t>(hs.solve(num_vars));
}

std::size_t standard_monomial_count(std::span<const Monomial> leading, const Ring& ring, const DegreeVector& a) {
  std::size_t count = 0;
  for (const auto& m : enumerate_monomials(ring, a)) {
    bool standard = true;
    for (const auto& l : leading)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard)
      ++count;
  }
  return count;
}

}  // namespace psi
