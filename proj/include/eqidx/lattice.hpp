#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqidx/group.hpp"

namespace eqidx {

using SubgroupId = std::size_t;
using ClassId = std::size_t;

inline constexpr std::size_t kMaxSubgroups = 4096;

struct Subgroup {
  std::vector<ElementId> members;  // sorted
  std::vector<bool> mask;          // mask[g] iff g in members
  std::vector<ElementId> generators;

  std::size_t order() const { return members.size(); }
  bool contains(ElementId g) const { return mask[g]; }
};

/**
 * All subgroups of a finite group with inclusion order, conjugacy classes,
 * normalizers and the Moebius functions of Sub(G) and ConjSub(G).
 *
 * Subgroups are ordered by order, then by their sorted member lists; the
 * representative of a conjugacy class is its first member in that order and
 * classes are ordered by representative. Both orders extend inclusion, so
 * every Moebius table is upper triangular.
 */
class SubgroupLattice {
 public:
  static SubgroupLattice build(const FiniteGroup& g, std::size_t max_subgroups = kMaxSubgroups);

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& subgroup(SubgroupId h) const { return subgroups_[h]; }
  std::optional<SubgroupId> find(std::span<const ElementId> members) const;
  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return size() - 1; }

  /// h is contained in k.
  bool leq(SubgroupId h, SubgroupId k) const { return supergroups_[h][k]; }
  /// Subgroups containing h, in canonical order (h itself included).
  const std::vector<SubgroupId>& supergroups(SubgroupId h) const { return super_list_[h]; }

  SubgroupId normalizer(SubgroupId h) const { return normalizer_[h]; }

  std::size_t num_classes() const { return classes_.size(); }
  ClassId class_of(SubgroupId h) const { return class_of_[h]; }
  SubgroupId representative(ClassId c) const { return classes_[c].front(); }
  const std::vector<SubgroupId>& class_members(ClassId c) const { return classes_[c]; }
  std::size_t class_order(ClassId c) const { return subgroups_[representative(c)].order(); }

  /// Moebius function of Sub(G); zero unless h <= k.
  std::int64_t mu_sub(SubgroupId h, SubgroupId k) const;
  /// Nonzero entries (k, mu'(h,k)) of row h.
  const std::vector<std::pair<SubgroupId, std::int64_t>>& mu_sub_row(SubgroupId h) const {
    return mu_sub_[h];
  }
  /// Zeta and Moebius functions of ConjSub(G).
  bool zeta_conj(ClassId c, ClassId d) const { return zeta_conj_[c * num_classes() + d] != 0; }
  std::int64_t mu_conj(ClassId c, ClassId d) const { return mu_conj_[c * num_classes() + d]; }

  /// "H<order>_<index>"
  std::string label(SubgroupId h) const;
  std::string class_label(ClassId c) const { return label(representative(c)); }
  std::optional<SubgroupId> find_label(const std::string& label) const;

  std::size_t group_order() const { return group_order_; }

 private:
  std::size_t group_order_ = 0;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<ElementId>, SubgroupId> index_;
  std::vector<std::vector<bool>> supergroups_;
  std::vector<std::vector<SubgroupId>> super_list_;
  std::vector<SubgroupId> normalizer_;
  std::vector<std::vector<SubgroupId>> classes_;
  std::vector<ClassId> class_of_;
  std::vector<std::vector<std::pair<SubgroupId, std::int64_t>>> mu_sub_;
  std::vector<std::uint8_t> zeta_conj_;
  std::vector<std::int64_t> mu_conj_;
};

/// x H x^-1 as a subgroup id of `lat` (built over `g`).
SubgroupId conjugate_subgroup(const FiniteGroup& g, const SubgroupLattice& lat, ElementId x,
                              SubgroupId h);

/// {g in G : g^-1 H g = H}, for an arbitrary member list H.
std::vector<ElementId> normalizer(const FiniteGroup& g, std::span<const ElementId> members);

}  // namespace eqidx
