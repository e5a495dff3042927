#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eqidx/burnside.hpp"

namespace eqidx {

/// Index of a vector field summed over one orbit-type stratum V_i with
/// isotropy class [G_i].
struct StratumIndexEntry {
  ClassId cls;
  std::int64_t index;
};

struct StratumIndexData {
  RingPtr ring;
  std::vector<StratumIndexEntry> entries;
};

/// sum (|G_i|/|G|) ind_i [G/G_i]. Throws IntegralityError if some orbit
/// count is not an integer.
BurnsideElement index_from_strata(const StratumIndexData& d);

/// Entries hold the index of the quotient field on V^([H])/G per class:
/// sum ind_i [G/H_i].
BurnsideElement index_from_quotient(const StratumIndexData& d);

/**
 * Radial indices of the restrictions to fixed subspaces. per_subgroup[H] is
 * the index on V^H for every subgroup id; per_class[c], when present, is the
 * index on V^([H]) (points fixed by some conjugate of H).
 */
struct FixedSetIndexData {
  RingPtr ring;
  std::vector<std::int64_t> per_subgroup;
  std::optional<std::vector<std::int64_t>> per_class;
};

/// Forward evaluation: V^H gets sum_{K >= H} a_[K] |N(K)|/|K|, V^([H]) gets
/// sum_{[K] >= [H]} a_[K] |G|/|K|.
FixedSetIndexData fixed_indices_from_index(const BurnsideElement& b);

/// Inversion over ConjSub(G): a_[H] = |H|/|G| sum mu([H],[K]) ind(V^([K])).
BurnsideElement invert_conj(const RingPtr& ring, const std::vector<std::int64_t>& per_class);
/// Inversion over Sub(G): a_[H] = |H|/|N(H)| sum mu'(H,K) ind(V^K).
BurnsideElement invert_sub(const RingPtr& ring, const std::vector<std::int64_t>& per_subgroup);

/// Both inversions (the ConjSub one only if per_class is given); throws
/// DomainError if the data is not class constant or the two disagree, and
/// IntegralityError on a fractional coefficient.
BurnsideElement index_from_fixed_indices(const FixedSetIndexData& d);

/// Index of an orbit G p, given over the isotropy group G_p.
struct SingularOrbitDatum {
  SubgroupId isotropy;
  BurnsideElement local_index;  // lives in ring.subgroup_ring(isotropy)
};

/// I_{G_p}^G of the local index.
BurnsideElement induce_orbit_index(const SingularOrbitDatum& datum, const RingPtr& ring);

struct PoincareHopfReport {
  bool pass;
  BurnsideElement discrepancy;  // sum of orbit indices minus chi^G
};

PoincareHopfReport poincare_hopf_check(const BurnsideElement& chi_g,
                                       const std::vector<SingularOrbitDatum>& orbits);

/// ind_GSV = ind_rad + reduced chi^G of the Milnor fibre.
BurnsideElement gsv_from_radial(const BurnsideElement& ind_rad, const BurnsideElement& chibar);

/**
 * GSV index of a 1-form on a complete intersection from the dimensions of
 * the restricted Omega spaces. fixed_dim[K] is the dimension n_K of the
 * fixed part of the complete intersection for every subgroup K; dims must
 * have an entry for every K with n_K > k.
 */
BurnsideElement gsv_assemble_from_dims(const RingPtr& ring,
                                       const std::map<SubgroupId, std::int64_t>& dims,
                                       const std::vector<std::int64_t>& fixed_dim, std::int64_t k);

/// mu^G = (-1)^(n-1) chibar.
BurnsideElement equivariant_milnor(const BurnsideElement& chibar, int n);

/// r_G^(k) of an index.
inline std::int64_t higher_order_index(const BurnsideElement& b, int k) { return r_k(b, k); }

}  // namespace eqidx
