#ifndef PSI_GROEBNER_HPP
#define PSI_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "psi/graded.hpp"
#include "psi/poly.hpp"
#include "psi/presentation.hpp"

namespace psi {

struct GroebnerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_eliminated = 0;
  std::size_t reductions = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis (monic, interreduced). When `cap` is set the
/// basis is only guaranteed complete in total degree <= cap.
template <class C>
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly<C>> gens;
  std::optional<int> cap;
  GroebnerStats stats;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens)
      out.push_back(g.leading_monomial());
    return out;
  }
  bool contains_unit() const {
    return std::any_of(gens.begin(), gens.end(), [](const Poly<C>& g) { return g.leading_monomial().is_one(); });
  }
  /// Generator count per total degree.
  std::map<int, std::size_t> degree_histogram() const {
    std::map<int, std::size_t> h;
    for (const auto& g : gens)
      ++h[g.total_degree()];
    return h;
  }
};

namespace detail {

/// Full reduction of p by the reducers, tried in the given order.
template <class C>
Poly<C> reduce_by(Poly<C> p, std::span<const Poly<C>* const> reducers) {
  Poly<C> rem(p.ring());
  std::vector<Term<C>> rem_terms;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Poly<C>* hit = nullptr;
    for (const Poly<C>* g : reducers) {
      if (g->leading_monomial().divides(lm)) {
        hit = g;
        break;
      }
    }
    if (hit == nullptr) {
      rem_terms.push_back({lm, p.leading_coeff()});
      // drop the leading term: subtract it as a 1-term polynomial
      Poly<C> lead(p.ring(), {{lm, p.leading_coeff()}});
      p -= lead;
      continue;
    }
    C f = p.leading_coeff() * inverse(hit->leading_coeff());
    p.sub_mul_term(f, lm / hit->leading_monomial(), *hit);
  }
  return Poly<C>(p.ring(), std::move(rem_terms));
}

struct Pair {
  std::size_t a;
  std::size_t b;
  Monomial lcm;
  int degree;
};

}  // namespace detail

/// Remainder of p modulo the basis; zero iff p lies in the ideal (for
/// degrees within the cap).
template <class C>
Poly<C> normal_form(const Poly<C>& p, const GroebnerBasis<C>& g) {
  if (g.cap && p.total_degree() > *g.cap)
    throw UsageError("normal form requested above the basis degree cap");
  std::vector<const Poly<C>*> red;
  for (const auto& x : g.gens)
    red.push_back(&x);
  return detail::reduce_by<C>(p, red);
}

/// Remainder with an explicit reducer order; for a Groebner basis the
/// result does not depend on that order.
template <class C>
Poly<C> normal_form_ordered(const Poly<C>& p, std::span<const Poly<C>> reducers) {
  std::vector<const Poly<C>*> red;
  for (const auto& x : reducers)
    red.push_back(&x);
  return detail::reduce_by<C>(p, red);
}

/// Buchberger's algorithm for homogeneous input: pairs are processed by
/// increasing lcm degree (normal strategy, ties by the order on lcms),
/// with the Gebauer-Moeller criteria for discarding pairs.
template <class C>
GroebnerBasis<C> buchberger(std::vector<Poly<C>> input, std::optional<int> cap = std::nullopt) {
  if (input.empty())
    throw UsageError("Groebner basis of an empty generator list");
  RingPtr ring = input.front().ring();
  const auto& ord = ring->order();

  std::vector<Poly<C>> pending;
  for (auto& p : input) {
    if (p.is_zero())
      continue;
    if (cap && p.total_degree() > *cap)
      throw UsageError("degree cap below a generator degree");
    pending.push_back(p.monic());
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Poly<C>& x, const Poly<C>& y) { return x.total_degree() < y.total_degree(); });

  GroebnerBasis<C> out;
  out.ring = ring;
  out.cap = cap;
  auto& st = out.stats;

  std::vector<Poly<C>> all;       // every basis element ever added
  std::vector<char> active;       // not made redundant by a later leading monomial
  std::vector<detail::Pair> pairs;

  auto update = [&](std::size_t h) {
    const Monomial& lh = all[h].leading_monomial();
    std::vector<detail::Pair> cand;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g])
        cand.push_back({g, h, ring->lcm(all[g].leading_monomial(), lh), 0});
    st.pairs_created += cand.size();
    // chain criterion among the new pairs: keep (g,h) only if no other new
    // pair has an lcm properly dividing its lcm (coprime pairs survive
    // this step so that they can shadow others)
    std::vector<detail::Pair> kept;
    for (std::size_t x = 0; x < cand.size(); ++x) {
      bool coprime = all[cand[x].a].leading_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t y = 0; y < cand.size() && !dominated; ++y) {
          if (y == x || !cand[y].lcm.divides(cand[x].lcm))
            continue;
          // equal lcms: keep the first one only
          if (cand[y].lcm == cand[x].lcm)
            dominated = y < x;
          else
            dominated = true;
        }
      }
      if (!dominated)
        kept.push_back(cand[x]);
    }
    // product criterion
    std::vector<detail::Pair> fresh;
    for (auto& pr : kept) {
      if (all[pr.a].leading_monomial().coprime(lh))
        ++st.pairs_eliminated;
      else
        fresh.push_back(std::move(pr));
    }
    st.pairs_eliminated += cand.size() - kept.size();
    // old pairs made redundant by h
    std::vector<detail::Pair> old;
    for (auto& pr : pairs) {
      if (lh.divides(pr.lcm) && !(ring->lcm(all[pr.a].leading_monomial(), lh) == pr.lcm) &&
          !(ring->lcm(all[pr.b].leading_monomial(), lh) == pr.lcm)) {
        ++st.pairs_eliminated;
        continue;
      }
      old.push_back(std::move(pr));
    }
    pairs = std::move(old);
    for (auto& pr : fresh) {
      pr.degree = pr.lcm.total_degree();
      pairs.push_back(std::move(pr));
    }
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(all[g].leading_monomial()))
        active[g] = 0;
  };

  auto reducers = [&] {
    std::vector<const Poly<C>*> red;
    for (std::size_t g = 0; g < all.size(); ++g)
      if (active[g])
        red.push_back(&all[g]);
    return red;
  };

  auto add = [&](Poly<C> h) {
    ++st.reductions;
    h = detail::reduce_by<C>(std::move(h), reducers());
    if (h.is_zero()) {
      ++st.zero_reductions;
      return;
    }
    all.push_back(h.monic());
    active.push_back(1);
    update(all.size() - 1);
  };

  std::size_t next_input = 0;
  while (next_input < pending.size() || !pairs.empty()) {
    int deg = std::numeric_limits<int>::max();
    if (next_input < pending.size())
      deg = pending[next_input].total_degree();
    for (const auto& pr : pairs)
      deg = std::min(deg, pr.degree);
    if (cap && deg > *cap)
      break;

    // pairs of this degree, smallest lcm first
    std::vector<detail::Pair> batch;
    std::vector<detail::Pair> later;
    for (auto& pr : pairs)
      (pr.degree == deg ? batch : later).push_back(std::move(pr));
    pairs = std::move(later);
    std::stable_sort(batch.begin(), batch.end(),
                     [&](const detail::Pair& x, const detail::Pair& y) { return ord.less(x.lcm, y.lcm); });

    while (next_input < pending.size() && pending[next_input].total_degree() == deg)
      add(std::move(pending[next_input++]));
    for (const auto& pr : batch) {
      const auto& f = all[pr.a];
      const auto& g = all[pr.b];
      Poly<C> s = f.mul_term(inverse(f.leading_coeff()), pr.lcm / f.leading_monomial());
      s.sub_mul_term(inverse(g.leading_coeff()), pr.lcm / g.leading_monomial(), g);
      add(std::move(s));
    }
  }

  // minimal basis, then tail-reduce each element by the others
  std::vector<Poly<C>> minimal;
  for (std::size_t g = 0; g < all.size(); ++g)
    if (active[g])
      minimal.push_back(all[g]);
  std::vector<Poly<C>> reduced;
  for (std::size_t g = 0; g < minimal.size(); ++g) {
    std::vector<const Poly<C>*> others;
    for (std::size_t h = 0; h < minimal.size(); ++h)
      if (h != g)
        others.push_back(&minimal[h]);
    reduced.push_back(detail::reduce_by<C>(minimal[g], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly<C>& x, const Poly<C>& y) {
    return ord.less(x.leading_monomial(), y.leading_monomial());
  });
  out.gens = std::move(reduced);
  return out;
}

/// Dimension of k[x]/(monomials): the largest set of variables containing
/// the support of no given monomial.
std::size_t monomial_ideal_dimension(std::span<const Monomial> generators, std::size_t num_vars);

template <class C>
std::size_t krull_dimension(const GroebnerBasis<C>& g) {
  if (g.cap)
    throw UsageError("Krull dimension needs a complete (uncapped) basis");
  auto lms = g.leading_monomials();
  return monomial_ideal_dimension(lms, g.ring->num_vars());
}

/// Degree-a monomials divisible by no leading monomial.
std::size_t standard_monomial_count(std::span<const Monomial> leading, const Ring& ring, const DegreeVector& a);

template <class C>
std::size_t standard_monomial_count(const GroebnerBasis<C>& g, const DegreeVector& a) {
  if (g.cap && total_degree(a) > *g.cap)
    throw UsageError("standard monomial count requested above the degree cap");
  auto lms = g.leading_monomials();
  return standard_monomial_count(lms, *g.ring, a);
}

/// Relations of a presentation converted into the field of F.
template <class F>
std::vector<Poly<typename F::Elem>> relations_over(const PresentationSpec& spec, const F& field) {
  std::vector<Poly<typename F::Elem>> out;
  for (const auto& r : spec.relations)
    out.push_back(convert_poly(r, field));
  return out;
}

}  // namespace psi

#endif  // PSI_GROEBNER_HPP
