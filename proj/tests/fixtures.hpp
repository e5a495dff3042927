#pragma once

#include <random>
#include <string>
#include <vector>

#include "eqidx/burnside.hpp"
#include "eqidx/group.hpp"

namespace eqidx::testing {

inline FiniteGroup cyclic(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return FiniteGroup::from_permutations(n, {p});
}
inline FiniteGroup klein() { return FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}); }
inline FiniteGroup s3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }
inline FiniteGroup d4() { return FiniteGroup::from_permutations(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// The five groups the ring-axiom and round-trip properties run on.
inline std::vector<NamedGroup> test_groups() {
  return {{"Z2", cyclic(2)}, {"Z6", cyclic(6)}, {"Z2xZ2", klein()}, {"S3", s3()}, {"D4", d4()}};
}

/// Subgroup id of the unique subgroup of the given order (asserts uniqueness).
inline SubgroupId unique_of_order(const SubgroupLattice& lat, std::size_t order) {
  SubgroupId found = lat.size();
  for (SubgroupId h = 0; h < lat.size(); ++h)
    if (lat.subgroup(h).order() == order) {
      if (found != lat.size()) throw std::logic_error("order not unique");
      found = h;
    }
  if (found == lat.size()) throw std::logic_error("no subgroup of that order");
  return found;
}

/// [G/H] for the unique subgroup of the given order.
inline BurnsideElement orbit_of_order(const RingPtr& ring, std::size_t order) {
  return ring->orbit(unique_of_order(ring->lattice(), order));
}

inline BurnsideElement random_element(const RingPtr& ring, std::mt19937_64& rng, int lo = -5,
                                      int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::int64_t> c(ring->rank());
  for (auto& a : c) a = d(rng);
  return ring->element(std::move(c));
}

}  // namespace eqidx::testing
