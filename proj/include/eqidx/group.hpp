#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eqidx/rational.hpp"

namespace eqidx {

using ElementId = std::uint32_t;

/// Default bound on the order of groups generated from a presentation.
inline constexpr std::size_t kMaxGroupOrder = 2000;

/**
 * An explicit finite group with a full multiplication table.
 *
 * Elements are numbered 0..order()-1 in a canonical order: the identity is
 * always 0, permutation elements are sorted lexicographically by their
 * one-line images and diagonal elements by their phase vectors in [0,1)^n.
 * Groups built from an explicit table keep the given order, with the
 * identity moved to the front.
 */
class FiniteGroup {
 public:
  enum class Kind { Permutation, Diagonal, Table };

  /// Permutation group on `degree` points generated by one-line images
  /// (0-based, or 1-based if every image lies in 1..degree).
  static FiniteGroup from_permutations(std::size_t degree,
                                       const std::vector<std::vector<int>>& generators,
                                       std::size_t max_order = kMaxGroupOrder);

  /// Diagonal group generated by phase vectors in (Q/Z)^dimension; the phase
  /// a_j stands for the scaling z_j -> exp(2 pi i a_j) z_j.
  static FiniteGroup from_phases(std::size_t dimension,
                                 const std::vector<std::vector<Rational>>& generators,
                                 std::size_t max_order = kMaxGroupOrder);

  /// Group given by its Cayley table; table[a][b] = a*b. All group axioms are
  /// checked (associativity exhaustively up to order 64, sampled above).
  static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table);

  static FiniteGroup trivial();

  Kind kind() const { return kind_; }
  std::size_t order() const { return inverse_.size(); }
  ElementId identity() const { return 0; }
  ElementId multiply(ElementId a, ElementId b) const { return table_[a * order() + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId conjugate(ElementId g, ElementId h) const {  // g h g^-1
    return multiply(multiply(g, h), inverse(g));
  }
  const std::vector<ElementId>& generators() const { return generators_; }
  bool is_abelian() const { return abelian_; }

  /// Number of points (permutation groups) or coordinates (diagonal groups).
  std::size_t degree() const { return degree_; }
  /// One-line image of a permutation element (0-based).
  const std::vector<int>& permutation(ElementId e) const;
  /// Phase vector of a diagonal element, each entry in [0, 1).
  std::vector<Rational> phases(ElementId e) const;
  /// Phase numerators over common_denominator().
  std::span<const std::int64_t> phase_numerators(ElementId e) const;
  std::int64_t common_denominator() const { return denominator_; }

  /// Sorted member list of the subgroup generated by `gens`.
  std::vector<ElementId> closure(std::span<const ElementId> gens) const;

  /// True iff `members` (any order) is a subgroup.
  bool is_subgroup(std::span<const ElementId> members) const;

  /// The subgroup on `members` as a group in its own right. Element i of the
  /// result is the i-th smallest member; the presentation data is inherited.
  FiniteGroup induced_subgroup(std::span<const ElementId> members) const;

  /// Conjugacy classes of elements, each sorted, ordered by smallest member.
  const std::vector<std::vector<ElementId>>& conjugacy_classes() const { return classes_; }
  std::size_t class_of_element(ElementId e) const { return class_of_[e]; }

  /// Stable short identifier derived from the multiplication table.
  std::string fingerprint() const;
  std::string element_label(ElementId e) const;

  /// Structural equality: same presentation kind, elements and table.
  bool operator==(const FiniteGroup& other) const;

 private:
  FiniteGroup() = default;
  void finish(std::size_t n);  // inverses, abelian flag, element classes

  Kind kind_ = Kind::Table;
  std::size_t degree_ = 0;
  std::vector<std::vector<int>> perms_;
  std::int64_t denominator_ = 1;
  std::vector<std::vector<std::int64_t>> phase_nums_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> generators_;
  std::vector<std::vector<ElementId>> classes_;
  std::vector<std::size_t> class_of_;
  bool abelian_ = true;
};

}  // namespace eqidx
