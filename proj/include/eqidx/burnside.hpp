#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eqidx/group.hpp"
#include "eqidx/lattice.hpp"
#include "eqidx/rational.hpp"

namespace eqidx {

class BurnsideElement;

/// Marks m([K],[H]) = |(G/K)^H| over ConjSub(G) in canonical class order.
class TableOfMarks {
 public:
  TableOfMarks() = default;
  explicit TableOfMarks(std::size_t n) : n_(n), m_(n * n, 0) {}

  std::size_t size() const { return n_; }
  /// Number of cosets of a representative of class k fixed by class h.
  std::int64_t operator()(ClassId k, ClassId h) const { return m_[k * n_ + h]; }
  std::int64_t& at(ClassId k, ClassId h) { return m_[k * n_ + h]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> m_;
};

/**
 * The Burnside ring B(G) of a finite group, with everything that depends
 * only on G: the subgroup lattice, the table of marks and the coset data
 * used for fixed-point counts. Immutable after construction and always held
 * through a shared_ptr so elements can refer back to it.
 *
 * A ring created by subgroup_ring() remembers its parent and the embedding
 * of its elements, which is what restriction and induction need.
 */
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
 public:
  static std::shared_ptr<const BurnsideRing> create(FiniteGroup g);

  const FiniteGroup& group() const { return group_; }
  const SubgroupLattice& lattice() const { return lattice_; }
  const TableOfMarks& marks() const { return marks_; }
  /// Number of basis elements [G/H].
  std::size_t rank() const { return lattice_.num_classes(); }

  BurnsideElement zero() const;
  BurnsideElement one() const;
  BurnsideElement basis(ClassId c) const;
  /// [G/H] for an arbitrary subgroup id.
  BurnsideElement orbit(SubgroupId h) const;
  BurnsideElement element(std::vector<std::int64_t> coeffs) const;

  /// The ring of the subgroup h, with this ring as its parent.
  std::shared_ptr<const BurnsideRing> subgroup_ring(SubgroupId h) const;
  const std::shared_ptr<const BurnsideRing>& parent() const { return parent_; }
  /// Parent element id of each element of this group (identity if no parent).
  const std::vector<ElementId>& embedding() const { return embedding_; }

  /// Conjugate x K x^-1 of the class representative K, one per left coset xK.
  const std::vector<SubgroupId>& coset_conjugates(ClassId c) const { return coset_conj_[c]; }
  /// Index of the left coset of the class-c representative containing g.
  std::size_t coset_of(ClassId c, ElementId g) const { return coset_index_[c][g]; }
  /// A representative of each left coset of the class-c representative.
  const std::vector<ElementId>& coset_representatives(ClassId c) const { return coset_reps_[c]; }

  /// True if both rings describe the same group (so coefficients are comparable).
  bool same_group(const BurnsideRing& other) const;

 private:
  BurnsideRing(FiniteGroup g, SubgroupLattice lat);

  FiniteGroup group_;
  SubgroupLattice lattice_;
  TableOfMarks marks_;
  std::vector<std::vector<SubgroupId>> coset_conj_;
  std::vector<std::vector<std::size_t>> coset_index_;
  std::vector<std::vector<ElementId>> coset_reps_;
  std::shared_ptr<const BurnsideRing> parent_;
  std::vector<ElementId> embedding_;
};

using RingPtr = std::shared_ptr<const BurnsideRing>;

/// An integer combination sum a_[H] [G/H] over ConjSub(G).
class BurnsideElement {
 public:
  BurnsideElement(RingPtr ring, std::vector<std::int64_t> coeffs);

  const BurnsideRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t coeff(ClassId c) const { return coeffs_[c]; }
  bool is_zero() const;

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  BurnsideElement& operator*=(std::int64_t k);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator-(BurnsideElement a) { return a *= -1; }
  friend BurnsideElement operator*(std::int64_t k, BurnsideElement a) { return a *= k; }
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
  bool operator==(const BurnsideElement& o) const;

  /// e.g. "[G/H1_0] - 2[G/H3_4]", "0" for zero.
  std::string to_string() const;

 private:
  void check_same_ring(const BurnsideElement& o) const;

  RingPtr ring_;
  std::vector<std::int64_t> coeffs_;
};

/// A rational value per conjugacy class of elements of G.
struct ClassFunction {
  RingPtr ring;
  std::vector<Rational> values;  // indexed like group().conjugacy_classes()

  Rational at(ElementId g) const { return values[ring->group().class_of_element(g)]; }
};

BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b);

/// Mark vector (|b^H|)_[H] of b.
std::vector<std::int64_t> mark_vector(const BurnsideElement& b);
std::int64_t mark(const BurnsideElement& b, ClassId h);
/// Inverse of mark_vector; throws IntegralityError if the marks are not
/// those of an element of B(G).
BurnsideElement from_marks(const RingPtr& ring, std::span<const std::int64_t> marks);

/// |b| = sum a_[H] |G|/|H|.
std::int64_t cardinality(const BurnsideElement& b);

/// R^G_H: b viewed as an H-set. The result lives in ring.subgroup_ring(h).
BurnsideElement restrict(const BurnsideElement& b, SubgroupId h);
/// Same, into an existing subgroup ring of b's ring.
BurnsideElement restrict(const BurnsideElement& b, const RingPtr& subring);

/// I^G_H: [H/K] -> [G/K]. b must live in a ring created by subgroup_ring().
BurnsideElement induce(const BurnsideElement& b);
BurnsideElement induce(const BurnsideElement& b, const RingPtr& target);

/// Number of fixed points of b under every subgroup: entry K is the signed
/// count of points (cosets) whose stabilizer is exactly K.
std::vector<std::int64_t> stabilizer_weights(const BurnsideElement& b);

/// Pairwise commuting (k+1)-tuples bound: requires k <= 3 and |G|^(k+1) <= 1e8.
void check_tuple_bound(std::size_t group_order, int k);

/// r_G^(k)(b) = (1/|G|) sum over commuting (k+1)-tuples g of |b^<g>|.
std::int64_t r_k(const BurnsideElement& b, int k);

/// g -> |b^<g>|, the character of the permutation representation.
ClassFunction permutation_character(const BurnsideElement& b);

}  // namespace eqidx
