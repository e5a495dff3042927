#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eqidx/burnside.hpp"
#include "eqidx/group.hpp"
#include "eqidx/rational.hpp"

namespace eqidx {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline constexpr std::size_t kMaxVariables = 12;
/// Largest |det E| accepted by duality_check.
inline constexpr std::int64_t kMaxDualityOrder = 500;

/// One block of an invertible polynomial. vars lists the variables in block
/// order: z1^a1 z2 + ... + zk^ak for a chain, with zk^ak last, and
/// z1^a1 z2 + ... + zk^ak z1 for a loop. rows[i] is the monomial whose leading
/// variable is vars[i] and exponents[i] its exponent a_i.
struct Atom {
  enum class Kind { Fermat, Chain, Loop };
  Kind kind;
  std::vector<std::size_t> vars;
  std::vector<std::size_t> rows;
  std::vector<std::int64_t> exponents;
};

const char* atom_kind_name(Atom::Kind k);

/**
 * A polynomial f = sum_i prod_j z_j^E_ij with square exponent matrix E that
 * splits into Fermat, chain and loop atoms. Row i is the i-th monomial.
 */
class InvertiblePolynomial {
 public:
  /// Checks shape and det, finds the atom decomposition and solves E q = 1.
  static InvertiblePolynomial validate(IntMatrix e);

  std::size_t num_variables() const { return e_.size(); }
  const IntMatrix& exponents() const { return e_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Rational>& weights() const { return weights_; }
  /// E^-1, row major.
  const std::vector<std::vector<Rational>>& inverse() const { return inverse_; }
  std::int64_t det() const { return det_; }

  /// e.g. "x^2*y + y^3"; "0" for no variables.
  std::string to_string() const;

 private:
  InvertiblePolynomial() = default;

  IntMatrix e_;
  std::vector<Atom> atoms_;
  std::vector<Rational> weights_;
  std::vector<std::vector<Rational>> inverse_;
  std::int64_t det_ = 1;
};

inline InvertiblePolynomial validate(IntMatrix e) {
  return InvertiblePolynomial::validate(std::move(e));
}

/// Milnor-Orlik: prod (1/q_i - 1); 1 for no variables.
std::int64_t milnor_number(const InvertiblePolynomial& f);

/// G_f = {a in (Q/Z)^n : E a in Z^n}, generated by the columns of E^-1.
FiniteGroup symmetry_group(const InvertiblePolynomial& f, std::size_t max_order = kMaxGroupOrder);

/// The polynomial with exponent matrix E^T.
InvertiblePolynomial transpose(const InvertiblePolynomial& f);

/// True iff E a is integral.
bool is_symmetry(const InvertiblePolynomial& f, const std::vector<Rational>& a);

/// a^T E^T b mod 1 for a in G_f and b in G_{f~}.
Rational pairing(const InvertiblePolynomial& f, const std::vector<Rational>& a,
                 const std::vector<Rational>& b);

/// Coordinates fixed by every element of the subgroup `members` of a
/// diagonal group.
std::vector<std::size_t> fixed_locus(const FiniteGroup& g, std::span<const ElementId> members);

/// The monomials supported on the variables in `s`, as a polynomial in
/// those variables (in increasing order). Throws if that is not invertible.
InvertiblePolynomial restrict_to(const InvertiblePolynomial& f, const std::vector<std::size_t>& s);

/// chi of the Milnor fibre of f restricted to the fixed locus of H.
std::int64_t chi_milnor_fixed(const InvertiblePolynomial& f, const FiniteGroup& g,
                              std::span<const ElementId> members);

/// Per-subgroup Milnor data over the subgroup lattice of a group of
/// symmetries of f.
struct MilnorRow {
  std::vector<std::size_t> fixed;  // S_H
  std::int64_t mu;                 // Milnor number of f restricted to S_H
  std::int64_t chi;                // chi(M_f^H)
};

struct MilnorData {
  std::vector<MilnorRow> per_subgroup;
  BurnsideElement chi_g;
};

/// ring must be over a diagonal group of symmetries of f (for example G_f
/// itself or one of its subgroup rings).
MilnorData milnor_data(const InvertiblePolynomial& f, const RingPtr& ring);

/// chi^G(M_f) from the exact-isotropy counts.
BurnsideElement chi_G_milnor(const InvertiblePolynomial& f, const RingPtr& ring);

/// ind_rad^G(df) = [G/G] - chi^G(M_f).
BurnsideElement index_df(const InvertiblePolynomial& f, const RingPtr& ring);

/**
 * f together with its transpose, both symmetry groups and the pairing
 * between them. Construction fails unless the pairing is perfect.
 */
class DualityPair {
 public:
  explicit DualityPair(const InvertiblePolynomial& f, std::int64_t max_order = kMaxDualityOrder);

  const InvertiblePolynomial& f() const { return f_; }
  const InvertiblePolynomial& dual() const { return ft_; }
  const RingPtr& ring() const { return ring_; }
  const RingPtr& dual_ring() const { return dual_ring_; }

  /// Pairing of element a of G_f with element b of G_{f~}, in [0, 1).
  Rational pairing(ElementId a, ElementId b) const;
  /// H^T, the annihilator of subgroup h of G_f, as a subgroup of G_{f~}.
  SubgroupId dual_subgroup(SubgroupId h) const;
  /// The annihilator in G_f of subgroup k of G_{f~}.
  SubgroupId dual_subgroup_of_dual(SubgroupId k) const;

 private:
  InvertiblePolynomial f_;
  InvertiblePolynomial ft_;
  RingPtr ring_;
  RingPtr dual_ring_;
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> table_;  // numerators over modulus_
};

struct DualSubgroupRow {
  SubgroupId h;
  SubgroupId h_dual;
  std::int64_t r1;       // r^(1) of index_df(f, H)
  std::int64_t r1_dual;  // r^(1) of index_df(f~, H^T)
};

struct DualityReport {
  std::size_t num_variables;
  std::int64_t r0;
  std::int64_t r0_dual;
  std::vector<DualSubgroupRow> pairs;

  bool r0_equal() const { return r0 == r0_dual; }
  bool r1_equal() const;
  /// r1 = (-1)^n r1_dual for every pair.
  bool r1_equal_signed() const;
};

DualityReport duality_check(const InvertiblePolynomial& f);
DualityReport duality_check(const DualityPair& pair);

}  // namespace eqidx
