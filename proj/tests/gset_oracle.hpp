#pragma once

// Test-only oracle: explicit finite G-sets and their orbit decompositions,
// independent of the table of marks.

#include <functional>
#include <vector>

#include "eqidx/burnside.hpp"

namespace eqidx::testing {

/// A finite G-set given by the permutation of its points by each element.
struct GSet {
  std::vector<std::vector<std::size_t>> action;  // action[g][x] = g.x
  std::size_t size() const { return action.empty() ? 0 : action[0].size(); }
};

/// G/K with left multiplication, points indexed by coset representatives.
inline GSet coset_space(const BurnsideRing& ring, ClassId c) {
  const auto& g = ring.group();
  const auto& reps = ring.coset_representatives(c);
  GSet s;
  s.action.assign(g.order(), std::vector<std::size_t>(reps.size()));
  for (ElementId x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < reps.size(); ++i)
      s.action[x][i] = ring.coset_of(c, g.multiply(x, reps[i]));
  return s;
}

inline GSet product(const GSet& a, const GSet& b) {
  GSet s;
  s.action.assign(a.action.size(), std::vector<std::size_t>(a.size() * b.size()));
  for (std::size_t x = 0; x < a.action.size(); ++x)
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        s.action[x][i * b.size() + j] = a.action[x][i] * b.size() + b.action[x][j];
  return s;
}

/// Orbit decomposition sum [G/Stab] as a Burnside element.
inline BurnsideElement decompose(const RingPtr& ring, const GSet& s) {
  const auto& g = ring->group();
  std::vector<std::int64_t> coeffs(ring->rank(), 0);
  std::vector<bool> seen(s.size(), false);
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (seen[p]) continue;
    for (ElementId x = 0; x < g.order(); ++x) seen[s.action[x][p]] = true;
    std::vector<ElementId> stab;
    for (ElementId x = 0; x < g.order(); ++x)
      if (s.action[x][p] == p) stab.push_back(x);
    coeffs[ring->lattice().class_of(*ring->lattice().find(stab))] += 1;
  }
  return ring->element(std::move(coeffs));
}

/// Number of pairwise commuting m-tuples inside the subgroup h.
inline std::int64_t commuting_tuples_in(const FiniteGroup& g, const Subgroup& h, int m) {
  std::function<std::int64_t(std::vector<ElementId>&, int)> rec =
      [&](std::vector<ElementId>& chosen, int left) -> std::int64_t {
    if (left == 0) return 1;
    std::int64_t s = 0;
    for (ElementId x : h.members) {
      bool ok = true;
      for (ElementId y : chosen) ok = ok && g.multiply(x, y) == g.multiply(y, x);
      if (!ok) continue;
      chosen.push_back(x);
      s += rec(chosen, left - 1);
      chosen.pop_back();
    }
    return s;
  };
  std::vector<ElementId> chosen;
  return rec(chosen, m);
}

}  // namespace eqidx::testing
