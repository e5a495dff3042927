#include "eqidx/gspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eqidx {

SimplicialComplex SimplicialComplex::from_simplices(std::size_t num_vertices,
                                                    const std::vector<Simplex>& simplices) {
  std::set<Simplex> all;
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty()) continue;
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw DomainError("simplex with repeated vertex");
    if (s.back() >= num_vertices) throw DomainError("simplex refers to unknown vertex");
    if (s.size() > 20) throw DomainError("simplex dimension too large");
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) face.push_back(s[i]);
      all.insert(std::move(face));
    }
  }
  for (std::size_t v = 0; v < num_vertices; ++v) all.insert(Simplex{v});

  SimplicialComplex c;
  c.num_vertices_ = num_vertices;
  c.simplices_.assign(all.begin(), all.end());
  std::stable_sort(c.simplices_.begin(), c.simplices_.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < c.simplices_.size(); ++i) c.index_[c.simplices_[i]] = i;
  return c;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

GSimplicialComplex::GSimplicialComplex(RingPtr ring, SimplicialComplex complex,
                                       std::vector<std::vector<std::size_t>> action)
    : ring_(std::move(ring)), complex_(std::move(complex)), action_(std::move(action)) {
  const FiniteGroup& g = ring_->group();
  const std::size_t nv = complex_.num_vertices();
  if (action_.size() != g.order()) throw DomainError("action must list every group element");
  for (const auto& p : action_) {
    if (p.size() != nv) throw DomainError("action has wrong number of vertices");
    std::vector<bool> seen(nv, false);
    for (auto v : p) {
      if (v >= nv || seen[v]) throw DomainError("action is not a vertex permutation");
      seen[v] = true;
    }
  }
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b)
      for (std::size_t v = 0; v < nv; ++v)
        if (action_[g.multiply(a, b)][v] != action_[a][action_[b][v]])
          throw DomainError("action is not a group homomorphism");

  simplex_action_.assign(g.order(), std::vector<std::size_t>(complex_.size()));
  for (ElementId a = 0; a < g.order(); ++a)
    for (std::size_t s = 0; s < complex_.size(); ++s) {
      Simplex img;
      for (auto v : complex_.simplices()[s]) img.push_back(action_[a][v]);
      std::sort(img.begin(), img.end());
      auto t = complex_.find(img);
      if (!t) throw DomainError("action does not map simplices to simplices");
      simplex_action_[a][s] = *t;
    }
}

GSimplicialComplex GSimplicialComplex::from_generators(
    SimplicialComplex complex, const std::vector<std::vector<std::size_t>>& generators) {
  const std::size_t nv = complex.num_vertices();
  std::vector<std::size_t> id(nv);
  std::iota(id.begin(), id.end(), std::size_t{0});
  for (const auto& p : generators)
    if (p.size() != nv) throw DomainError("generator has wrong number of vertex images");
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& p : generators) {
      std::vector<std::size_t> q(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        if (p[v] >= nv) throw DomainError("generator image out of range");
        q[v] = elems[i][p[v]];
      }
      if (seen.insert(q).second) {
        elems.push_back(std::move(q));
        if (elems.size() > kMaxGroupOrder) throw DomainError("group order exceeds bound");
      }
    }
  std::sort(elems.begin(), elems.end());
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      std::vector<std::size_t> q(nv);  // (a*b)(v) = a(b(v))
      for (std::size_t v = 0; v < nv; ++v) q[v] = elems[a][elems[b][v]];
      table[a][b] = index.at(q);
    }
  auto ring = BurnsideRing::create(FiniteGroup::from_table(table));
  return GSimplicialComplex(std::move(ring), std::move(complex), std::move(elems));
}

GSimplicialComplex GSimplicialComplex::with_trivial_action(RingPtr ring,
                                                           SimplicialComplex complex) {
  std::vector<std::size_t> id(complex.num_vertices());
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> action(ring->group().order(), id);
  return GSimplicialComplex(std::move(ring), std::move(complex), std::move(action));
}

bool GSimplicialComplex::is_regular() const {
  for (ElementId a = 0; a < action_.size(); ++a)
    for (std::size_t s = 0; s < complex_.size(); ++s) {
      if (simplex_action_[a][s] != s) continue;
      for (auto v : complex_.simplices()[s])
        if (action_[a][v] != v) return false;
    }
  return true;
}

std::vector<ElementId> GSimplicialComplex::pointwise_stabilizer(std::size_t s) const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < action_.size(); ++a) {
    const auto& verts = complex_.simplices()[s];
    if (std::all_of(verts.begin(), verts.end(), [&](auto v) { return action_[a][v] == v; }))
      out.push_back(a);
  }
  return out;
}

BurnsideElement chi_G_stratified(const StratifiedGData& data, bool reduced) {
  if (!data.ring) throw DomainError("stratified data without a group");
  auto out = data.ring->zero();
  for (const auto& s : data.strata) {
    if (s.cls >= data.ring->rank()) throw DomainError("stratum refers to unknown subgroup class");
    out += s.chi_quotient * data.ring->basis(s.cls);
  }
  if (reduced) out -= data.ring->one();
  return out;
}

namespace {

void require_regular(const GSimplicialComplex& x) {
  if (!x.is_regular())
    throw DomainError("action is not regular; subdivide the complex first");
}

}  // namespace

BurnsideElement chi_G_simplicial(const GSimplicialComplex& x) {
  require_regular(x);
  const auto& ring = x.ring();
  const auto& c = x.complex();
  std::vector<std::int64_t> coeffs(ring->rank(), 0);
  std::vector<bool> seen(c.size(), false);
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (seen[s]) continue;
    for (ElementId a = 0; a < ring->group().order(); ++a) seen[x.simplex_image(a, s)] = true;
    auto stab = x.pointwise_stabilizer(s);  // equals the setwise stabilizer here
    auto h = ring->lattice().find(stab);
    coeffs[ring->lattice().class_of(*h)] += (c.simplices()[s].size() % 2 == 1) ? 1 : -1;
  }
  return ring->element(std::move(coeffs));
}

SimplicialComplex fixed_subcomplex(const GSimplicialComplex& x, SubgroupId h) {
  require_regular(x);
  const auto& lat = x.ring()->lattice();
  if (h >= lat.size()) throw DomainError("unknown subgroup");
  const auto& gens = lat.subgroup(h).generators;
  std::vector<Simplex> fixed;
  std::vector<std::size_t> new_id(x.complex().num_vertices(), static_cast<std::size_t>(-1));
  std::size_t nv = 0;
  for (std::size_t v = 0; v < x.complex().num_vertices(); ++v)
    if (std::all_of(gens.begin(), gens.end(), [&](ElementId g) { return x.vertex_image(g, v) == v; }))
      new_id[v] = nv++;
  for (const auto& s : x.complex().simplices()) {
    Simplex t;
    for (auto v : s) {
      if (new_id[v] == static_cast<std::size_t>(-1)) break;
      t.push_back(new_id[v]);
    }
    if (t.size() == s.size()) fixed.push_back(std::move(t));
  }
  return SimplicialComplex::from_simplices(nv, fixed);
}

GSimplicialComplex barycentric_subdivide(const GSimplicialComplex& x) {
  const auto& c = x.complex();
  const std::size_t n = c.size();
  // Chains sigma_0 < sigma_1 < ... built by extending with proper cofaces.
  std::vector<std::vector<std::size_t>> cofaces(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& sa = c.simplices()[a];
      const auto& sb = c.simplices()[b];
      if (sa.size() < sb.size() && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
        cofaces[a].push_back(b);
    }
  std::vector<Simplex> chains;
  std::vector<Simplex> frontier;
  for (std::size_t a = 0; a < n; ++a) frontier.push_back({a});
  while (!frontier.empty()) {
    std::vector<Simplex> next;
    for (const auto& ch : frontier) {
      for (std::size_t b : cofaces[ch.back()]) {
        Simplex ext = ch;
        ext.push_back(b);
        next.push_back(std::move(ext));
      }
      chains.push_back(ch);
    }
    frontier = std::move(next);
  }
  for (auto& ch : chains) std::sort(ch.begin(), ch.end());
  auto sub = SimplicialComplex::from_simplices(n, chains);
  std::vector<std::vector<std::size_t>> action(x.action().size(), std::vector<std::size_t>(n));
  for (ElementId a = 0; a < action.size(); ++a)
    for (std::size_t s = 0; s < n; ++s) action[a][s] = x.simplex_image(a, s);
  return GSimplicialComplex(x.ring(), std::move(sub), std::move(action));
}

GSimplicialComplex disjoint_union(const GSimplicialComplex& a, const GSimplicialComplex& b) {
  if (!a.ring()->same_group(*b.ring())) throw DomainError("disjoint union over different groups");
  const std::size_t off = a.complex().num_vertices();
  std::vector<Simplex> simplices = a.complex().simplices();
  for (auto s : b.complex().simplices()) {
    for (auto& v : s) v += off;
    simplices.push_back(std::move(s));
  }
  auto u = SimplicialComplex::from_simplices(off + b.complex().num_vertices(), simplices);
  std::vector<std::vector<std::size_t>> action = a.action();
  for (ElementId g = 0; g < action.size(); ++g)
    for (auto v : b.action()[g]) action[g].push_back(v + off);
  return GSimplicialComplex(a.ring(), std::move(u), std::move(action));
}

namespace {

// Sum over commuting tuples of length depth_left+1 from `cand` of the signed
// count of simplices in `active` fixed by every tuple entry.
std::int64_t fixed_chi_sum(const GSimplicialComplex& x, const std::vector<std::size_t>& active,
                           const std::vector<ElementId>& cand, int depth_left) {
  if (active.empty()) return 0;
  const FiniteGroup& g = x.ring()->group();
  const auto& simplices = x.complex().simplices();
  auto fixes = [&](ElementId a, std::size_t s) {
    return std::all_of(simplices[s].begin(), simplices[s].end(),
                       [&](auto v) { return x.vertex_image(a, v) == v; });
  };
  std::int64_t total = 0;
  for (ElementId a : cand) {
    std::vector<std::size_t> next_active;
    for (auto s : active)
      if (fixes(a, s)) next_active.push_back(s);
    if (depth_left == 0) {
      for (auto s : next_active) total += (simplices[s].size() % 2 == 1) ? 1 : -1;
      continue;
    }
    std::vector<ElementId> next_cand;
    for (ElementId b : cand)
      if (g.multiply(a, b) == g.multiply(b, a)) next_cand.push_back(b);
    total += fixed_chi_sum(x, next_active, next_cand, depth_left - 1);
  }
  return total;
}

}  // namespace

std::int64_t chi_k_direct(const GSimplicialComplex& x, int k) {
  require_regular(x);
  const FiniteGroup& g = x.ring()->group();
  check_tuple_bound(g.order(), k);
  std::vector<std::size_t> active(x.complex().size());
  std::iota(active.begin(), active.end(), std::size_t{0});
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return exact_div(fixed_chi_sum(x, active, all, k), static_cast<std::int64_t>(g.order()),
                   "chi_k_direct");
}

}  // namespace eqidx
