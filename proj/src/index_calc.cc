#include "eqidx/index_calc.hpp"

#include <string>

namespace eqidx {

namespace {

std::int64_t order_of(const SubgroupLattice& lat, SubgroupId h) {
  return static_cast<std::int64_t>(lat.subgroup(h).order());
}

void check_class(const BurnsideRing& ring, ClassId c, const char* what) {
  if (c >= ring.rank())
    throw DomainError(std::string(what) + ": class id " + std::to_string(c) + " out of range");
}

}  // namespace

BurnsideElement index_from_strata(const StratumIndexData& d) {
  const auto& lat = d.ring->lattice();
  const auto g = static_cast<std::int64_t>(d.ring->group().order());
  std::vector<std::int64_t> out(d.ring->rank(), 0);
  for (const auto& e : d.entries) {
    check_class(*d.ring, e.cls, "index_from_strata");
    const auto h = static_cast<std::int64_t>(lat.class_order(e.cls));
    out[e.cls] += exact_div(h * e.index, g, "orbit count of stratum " + lat.class_label(e.cls));
  }
  return d.ring->element(std::move(out));
}

BurnsideElement index_from_quotient(const StratumIndexData& d) {
  std::vector<std::int64_t> out(d.ring->rank(), 0);
  for (const auto& e : d.entries) {
    check_class(*d.ring, e.cls, "index_from_quotient");
    out[e.cls] += e.index;
  }
  return d.ring->element(std::move(out));
}

FixedSetIndexData fixed_indices_from_index(const BurnsideElement& b) {
  const BurnsideRing& ring = b.ring();
  const auto& lat = ring.lattice();
  const auto g = static_cast<std::int64_t>(ring.group().order());

  // a_[K] |N(K)|/|K| is the same for every member of the class
  std::vector<std::int64_t> per_orbit(lat.size(), 0);
  for (SubgroupId k = 0; k < lat.size(); ++k) {
    const auto a = b.coeff(lat.class_of(k));
    if (a != 0) per_orbit[k] = a * (order_of(lat, lat.normalizer(k)) / order_of(lat, k));
  }
  FixedSetIndexData d{b.ring_ptr(), std::vector<std::int64_t>(lat.size(), 0), std::nullopt};
  for (SubgroupId h = 0; h < lat.size(); ++h)
    for (SubgroupId k : lat.supergroups(h)) d.per_subgroup[h] += per_orbit[k];

  std::vector<std::int64_t> per_class(ring.rank(), 0);
  for (ClassId c = 0; c < ring.rank(); ++c)
    for (ClassId e = c; e < ring.rank(); ++e)
      if (lat.zeta_conj(c, e))
        per_class[c] += b.coeff(e) * (g / static_cast<std::int64_t>(lat.class_order(e)));
  d.per_class = std::move(per_class);
  return d;
}

BurnsideElement invert_conj(const RingPtr& ring, const std::vector<std::int64_t>& per_class) {
  const auto& lat = ring->lattice();
  if (per_class.size() != ring->rank()) throw DomainError("per_class: wrong number of entries");
  const auto g = static_cast<std::int64_t>(ring->group().order());
  std::vector<std::int64_t> out(ring->rank(), 0);
  for (ClassId c = 0; c < ring->rank(); ++c) {
    std::int64_t s = 0;
    for (ClassId e = c; e < ring->rank(); ++e) s += lat.mu_conj(c, e) * per_class[e];
    out[c] = exact_div(static_cast<std::int64_t>(lat.class_order(c)) * s, g,
                       "coefficient of " + lat.class_label(c));
  }
  return ring->element(std::move(out));
}

BurnsideElement invert_sub(const RingPtr& ring, const std::vector<std::int64_t>& per_subgroup) {
  const auto& lat = ring->lattice();
  if (per_subgroup.size() != lat.size()) throw DomainError("per_subgroup: wrong number of entries");
  std::vector<std::int64_t> out(ring->rank(), 0);
  for (ClassId c = 0; c < ring->rank(); ++c) {
    std::int64_t coeff = 0;
    for (SubgroupId h : lat.class_members(c)) {
      std::int64_t s = 0;
      for (const auto& [k, m] : lat.mu_sub_row(h)) s += m * per_subgroup[k];
      const auto a = exact_div(order_of(lat, h) * s, order_of(lat, lat.normalizer(h)),
                               "coefficient of " + lat.label(h));
      if (h == lat.representative(c))
        coeff = a;
      else if (a != coeff)
        throw DomainError("fixed-set data gives different coefficients on conjugate subgroups " +
                          lat.class_label(c) + " and " + lat.label(h));
    }
    out[c] = coeff;
  }
  return ring->element(std::move(out));
}

BurnsideElement index_from_fixed_indices(const FixedSetIndexData& d) {
  const auto& lat = d.ring->lattice();
  if (d.per_subgroup.size() != lat.size()) throw DomainError("per_subgroup: wrong number of entries");
  for (ClassId c = 0; c < d.ring->rank(); ++c) {
    const auto v = d.per_subgroup[lat.representative(c)];
    for (SubgroupId h : lat.class_members(c))
      if (d.per_subgroup[h] != v)
        throw DomainError("fixed-set indices differ on conjugate subgroups " + lat.class_label(c) +
                          " and " + lat.label(h));
  }
  auto sub = invert_sub(d.ring, d.per_subgroup);
  if (d.per_class) {
    auto conj = invert_conj(d.ring, *d.per_class);
    if (!(conj == sub))
      throw DomainError("inversions over Sub(G) and ConjSub(G) disagree: " + sub.to_string() +
                        " vs " + conj.to_string());
  }
  return sub;
}

BurnsideElement induce_orbit_index(const SingularOrbitDatum& datum, const RingPtr& ring) {
  const auto& lat = ring->lattice();
  if (datum.isotropy >= lat.size()) throw DomainError("orbit isotropy is not a subgroup");
  const BurnsideRing& local = datum.local_index.ring();
  if (!local.parent() || !local.parent()->same_group(*ring) ||
      local.embedding() != lat.subgroup(datum.isotropy).members)
    throw DomainError("local index of orbit " + lat.label(datum.isotropy) +
                      " does not live on its isotropy group");
  return induce(datum.local_index, ring);
}

PoincareHopfReport poincare_hopf_check(const BurnsideElement& chi_g,
                                       const std::vector<SingularOrbitDatum>& orbits) {
  auto sum = chi_g.ring().zero();
  for (const auto& o : orbits) sum += induce_orbit_index(o, chi_g.ring_ptr());
  auto diff = sum - chi_g;
  const bool pass = diff.is_zero();
  return {pass, std::move(diff)};
}

BurnsideElement gsv_from_radial(const BurnsideElement& ind_rad, const BurnsideElement& chibar) {
  if (!ind_rad.ring().same_group(chibar.ring()))
    throw DomainError("gsv_from_radial: elements over different groups");
  return ind_rad + chibar;
}

BurnsideElement gsv_assemble_from_dims(const RingPtr& ring,
                                       const std::map<SubgroupId, std::int64_t>& dims,
                                       const std::vector<std::int64_t>& fixed_dim, std::int64_t k) {
  const auto& lat = ring->lattice();
  if (fixed_dim.size() != lat.size()) throw DomainError("fixed_dim: wrong number of entries");
  for (const auto& [h, v] : dims)
    if (h >= lat.size()) throw DomainError("dims: subgroup id " + std::to_string(h) + " out of range");
  std::vector<std::int64_t> term(lat.size(), 0);
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    if (fixed_dim[h] <= k) continue;
    auto it = dims.find(h);
    if (it == dims.end()) throw DomainError("dims: missing entry for " + lat.label(h));
    term[h] = ((fixed_dim[h] - k) % 2 == 0 ? 1 : -1) * it->second;
  }
  std::vector<std::int64_t> out(ring->rank(), 0);
  for (ClassId c = 0; c < ring->rank(); ++c) {
    const SubgroupId h = lat.representative(c);
    std::int64_t s = 0;
    for (const auto& [kk, m] : lat.mu_sub_row(h)) s += m * term[kk];
    out[c] = exact_div(order_of(lat, h) * s, order_of(lat, lat.normalizer(h)),
                       "GSV coefficient of " + lat.label(h));
  }
  return ring->element(std::move(out));
}

BurnsideElement equivariant_milnor(const BurnsideElement& chibar, int n) {
  return (n - 1) % 2 == 0 ? chibar : -chibar;
}

}  // namespace eqidx
