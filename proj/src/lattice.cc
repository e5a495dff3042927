#include "eqidx/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace eqidx {

namespace {

Subgroup make_subgroup(const FiniteGroup& g, std::vector<ElementId> gens) {
  Subgroup s;
  s.members = g.closure(gens);
  s.mask.assign(g.order(), false);
  for (ElementId m : s.members) s.mask[m] = true;
  // Keep a minimal-looking generator list: drop redundant ones greedily.
  std::vector<ElementId> kept;
  std::vector<ElementId> covered{g.identity()};
  for (ElementId x : gens) {
    if (std::binary_search(covered.begin(), covered.end(), x)) continue;
    kept.push_back(x);
    covered = g.closure(kept);
  }
  s.generators = std::move(kept);
  return s;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members < b.members;
}

}  // namespace

std::vector<ElementId> normalizer(const FiniteGroup& g, std::span<const ElementId> members) {
  if (!g.is_subgroup(members)) throw DomainError("normalizer: not a subgroup");
  std::vector<bool> in(g.order(), false);
  for (ElementId m : members) in[m] = true;
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (ElementId h : members) {
      if (!in[g.multiply(g.multiply(g.inverse(x), h), x)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

SubgroupLattice SubgroupLattice::build(const FiniteGroup& g, std::size_t max_subgroups) {
  if (g.order() > kMaxGroupOrder) throw DomainError("group order exceeds lattice bound");
  SubgroupLattice lat;
  lat.group_order_ = g.order();

  // Cyclic subgroups, then closure under joins with cyclic subgroups.
  std::map<std::vector<ElementId>, std::size_t> seen;
  std::vector<Subgroup> found;
  std::vector<std::size_t> cyclic;
  auto add = [&](Subgroup s) -> bool {
    auto [it, inserted] = seen.emplace(s.members, found.size());
    if (!inserted) return false;
    found.push_back(std::move(s));
    if (found.size() > max_subgroups)
      throw DomainError("number of subgroups exceeds bound " + std::to_string(max_subgroups));
    return true;
  };
  for (ElementId x = 0; x < g.order(); ++x) {
    std::vector<ElementId> gens;
    if (x != g.identity()) gens.push_back(x);
    if (add(make_subgroup(g, gens))) cyclic.push_back(found.size() - 1);
  }
  std::deque<std::size_t> queue(cyclic.begin(), cyclic.end());
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t c : cyclic) {
      if (found[c].generators.empty()) continue;
      ElementId gen = found[c].generators.front();
      if (found[a].contains(gen)) continue;
      std::vector<ElementId> gens = found[a].generators;
      gens.push_back(gen);
      Subgroup j = make_subgroup(g, std::move(gens));
      if (seen.count(j.members)) continue;
      add(std::move(j));
      queue.push_back(found.size() - 1);
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  lat.subgroups_ = std::move(found);
  const std::size_t n = lat.subgroups_.size();
  for (SubgroupId h = 0; h < n; ++h) lat.index_[lat.subgroups_[h].members] = h;

  // Inclusion.
  lat.supergroups_.assign(n, std::vector<bool>(n, false));
  lat.super_list_.assign(n, {});
  for (SubgroupId h = 0; h < n; ++h) {
    const auto& hs = lat.subgroups_[h];
    for (SubgroupId k = h; k < n; ++k) {
      const auto& ks = lat.subgroups_[k];
      if (ks.order() % hs.order() != 0) continue;
      bool sub = std::all_of(hs.generators.begin(), hs.generators.end(),
                             [&](ElementId x) { return ks.contains(x); });
      if (sub) {
        lat.supergroups_[h][k] = true;
        lat.super_list_[h].push_back(k);
      }
    }
  }

  // Normalizers: x normalizes H iff x h x^-1 in H for the generators of H.
  lat.normalizer_.assign(n, 0);
  for (SubgroupId h = 0; h < n; ++h) {
    const auto& hs = lat.subgroups_[h];
    std::vector<ElementId> norm;
    for (ElementId x = 0; x < g.order(); ++x) {
      bool ok = std::all_of(hs.generators.begin(), hs.generators.end(),
                            [&](ElementId y) { return hs.contains(g.conjugate(x, y)); });
      if (ok) norm.push_back(x);
    }
    lat.normalizer_[h] = lat.index_.at(norm);
  }

  // Conjugacy classes: orbits under conjugation by the group generators.
  lat.class_of_.assign(n, static_cast<ClassId>(-1));
  for (SubgroupId h = 0; h < n; ++h) {
    if (lat.class_of_[h] != static_cast<ClassId>(-1)) continue;
    const ClassId c = lat.classes_.size();
    std::vector<SubgroupId> orbit{h};
    lat.class_of_[h] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementId x : g.generators()) {
        std::vector<ElementId> conj;
        for (ElementId y : lat.subgroups_[orbit[i]].members) conj.push_back(g.conjugate(x, y));
        std::sort(conj.begin(), conj.end());
        SubgroupId k = lat.index_.at(conj);
        if (lat.class_of_[k] == static_cast<ClassId>(-1)) {
          lat.class_of_[k] = c;
          orbit.push_back(k);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    lat.classes_.push_back(std::move(orbit));
  }

  // Moebius function of Sub(G): mu(h,h) = 1, mu(h,k) = -sum_{h<=j<k} mu(h,j).
  lat.mu_sub_.assign(n, {});
  std::vector<std::int64_t> row(n, 0);
  for (SubgroupId h = 0; h < n; ++h) {
    const auto& ups = lat.super_list_[h];
    for (SubgroupId k : ups) {
      if (k == h) {
        row[k] = 1;
      } else {
        std::int64_t s = 0;
        for (SubgroupId j : ups) {
          if (j == k) break;
          if (row[j] != 0 && lat.supergroups_[j][k]) s += row[j];
        }
        row[k] = -s;
      }
      if (row[k] != 0) lat.mu_sub_[h].emplace_back(k, row[k]);
    }
    for (SubgroupId k : ups) row[k] = 0;
  }

  // Zeta and Moebius functions of ConjSub(G).
  const std::size_t nc = lat.classes_.size();
  lat.zeta_conj_.assign(nc * nc, 0);
  for (ClassId c = 0; c < nc; ++c)
    for (ClassId d = 0; d < nc; ++d) {
      SubgroupId rep = lat.representative(d);
      for (SubgroupId h : lat.classes_[c])
        if (lat.supergroups_[h][rep]) {
          lat.zeta_conj_[c * nc + d] = 1;
          break;
        }
    }
  lat.mu_conj_.assign(nc * nc, 0);
  for (ClassId c = 0; c < nc; ++c) {
    lat.mu_conj_[c * nc + c] = 1;
    for (ClassId d = c + 1; d < nc; ++d) {
      if (!lat.zeta_conj(c, d)) continue;
      std::int64_t s = 0;
      for (ClassId e = c; e < d; ++e)
        if (lat.zeta_conj(c, e) && lat.zeta_conj(e, d)) s += lat.mu_conj_[c * nc + e];
      lat.mu_conj_[c * nc + d] = -s;
    }
  }
  return lat;
}

std::optional<SubgroupId> SubgroupLattice::find(std::span<const ElementId> members) const {
  std::vector<ElementId> key(members.begin(), members.end());
  std::sort(key.begin(), key.end());
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId conjugate_subgroup(const FiniteGroup& g, const SubgroupLattice& lat, ElementId x,
                              SubgroupId h) {
  std::vector<ElementId> conj;
  for (ElementId y : lat.subgroup(h).members) conj.push_back(g.conjugate(x, y));
  auto k = lat.find(conj);
  if (!k) throw DomainError("lattice does not belong to this group");
  return *k;
}

std::int64_t SubgroupLattice::mu_sub(SubgroupId h, SubgroupId k) const {
  for (const auto& [j, m] : mu_sub_[h])
    if (j == k) return m;
  return 0;
}

std::string SubgroupLattice::label(SubgroupId h) const {
  return "H" + std::to_string(subgroups_[h].order()) + "_" + std::to_string(h);
}

std::optional<SubgroupId> SubgroupLattice::find_label(const std::string& label) const {
  for (SubgroupId h = 0; h < size(); ++h)
    if (this->label(h) == label) return h;
  return std::nullopt;
}

}  // namespace eqidx
