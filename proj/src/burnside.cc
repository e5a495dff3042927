#include "eqidx/burnside.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eqidx {

BurnsideRing::BurnsideRing(FiniteGroup g, SubgroupLattice lat)
    : group_(std::move(g)), lattice_(std::move(lat)) {
  const std::size_t nc = lattice_.num_classes();
  const std::size_t order = group_.order();
  coset_conj_.resize(nc);
  coset_index_.assign(nc, std::vector<std::size_t>(order, 0));
  coset_reps_.resize(nc);
  for (ClassId c = 0; c < nc; ++c) {
    const Subgroup& k = lattice_.subgroup(lattice_.representative(c));
    std::vector<bool> covered(order, false);
    for (ElementId x = 0; x < order; ++x) {
      if (covered[x]) continue;
      const std::size_t idx = coset_reps_[c].size();
      coset_reps_[c].push_back(x);
      for (ElementId y : k.members) {
        ElementId xy = group_.multiply(x, y);
        covered[xy] = true;
        coset_index_[c][xy] = idx;
      }
      coset_conj_[c].push_back(
          conjugate_subgroup(group_, lattice_, x, lattice_.representative(c)));
    }
  }

  marks_ = TableOfMarks(nc);
  for (ClassId c = 0; c < nc; ++c)
    for (ClassId h = 0; h < nc; ++h) {
      const SubgroupId rep = lattice_.representative(h);
      std::int64_t fixed = 0;
      for (SubgroupId conj : coset_conj_[c])
        if (lattice_.leq(rep, conj)) ++fixed;
      marks_.at(c, h) = fixed;
    }
}

RingPtr BurnsideRing::create(FiniteGroup g) {
  SubgroupLattice lat = SubgroupLattice::build(g);
  auto ring = std::shared_ptr<BurnsideRing>(new BurnsideRing(std::move(g), std::move(lat)));
  ring->embedding_.resize(ring->group_.order());
  std::iota(ring->embedding_.begin(), ring->embedding_.end(), ElementId{0});
  return ring;
}

RingPtr BurnsideRing::subgroup_ring(SubgroupId h) const {
  if (h >= lattice_.size()) throw DomainError("subgroup id out of range");
  const auto& members = lattice_.subgroup(h).members;
  FiniteGroup sub = group_.induced_subgroup(members);
  SubgroupLattice lat = SubgroupLattice::build(sub);
  auto ring = std::shared_ptr<BurnsideRing>(new BurnsideRing(std::move(sub), std::move(lat)));
  ring->parent_ = shared_from_this();
  ring->embedding_ = members;
  return ring;
}

bool BurnsideRing::same_group(const BurnsideRing& other) const {
  return this == &other || group_ == other.group_;
}

BurnsideElement BurnsideRing::zero() const {
  return BurnsideElement(shared_from_this(), std::vector<std::int64_t>(rank(), 0));
}

BurnsideElement BurnsideRing::one() const { return basis(rank() - 1); }

BurnsideElement BurnsideRing::basis(ClassId c) const {
  if (c >= rank()) throw DomainError("class id out of range");
  std::vector<std::int64_t> coeffs(rank(), 0);
  coeffs[c] = 1;
  return BurnsideElement(shared_from_this(), std::move(coeffs));
}

BurnsideElement BurnsideRing::orbit(SubgroupId h) const {
  if (h >= lattice_.size()) throw DomainError("subgroup id out of range");
  return basis(lattice_.class_of(h));
}

BurnsideElement BurnsideRing::element(std::vector<std::int64_t> coeffs) const {
  return BurnsideElement(shared_from_this(), std::move(coeffs));
}

BurnsideElement::BurnsideElement(RingPtr ring, std::vector<std::int64_t> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw DomainError("Burnside element without a ring");
  if (coeffs_.size() != ring_->rank())
    throw DomainError("expected " + std::to_string(ring_->rank()) + " Burnside coefficients, got " +
                      std::to_string(coeffs_.size()));
}

bool BurnsideElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto a) { return a == 0; });
}

void BurnsideElement::check_same_ring(const BurnsideElement& o) const {
  if (!ring_->same_group(*o.ring_)) throw DomainError("Burnside elements over different groups");
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  check_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(std::int64_t k) {
  for (auto& a : coeffs_) a *= k;
  return *this;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
  return multiply(a, b);
}

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  return ring_->same_group(*o.ring_) && coeffs_ == o.coeffs_;
}

std::string BurnsideElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (ClassId c = 0; c < coeffs_.size(); ++c) {
    std::int64_t a = coeffs_[c];
    if (a == 0) continue;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (std::abs(a) != 1) os << std::abs(a);
    os << "[G/" << ring_->lattice().class_label(c) << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<std::int64_t> mark_vector(const BurnsideElement& b) {
  const auto& m = b.ring().marks();
  std::vector<std::int64_t> out(m.size(), 0);
  for (ClassId k = 0; k < m.size(); ++k) {
    if (b.coeff(k) == 0) continue;
    for (ClassId h = 0; h < m.size(); ++h) out[h] += b.coeff(k) * m(k, h);
  }
  return out;
}

std::int64_t mark(const BurnsideElement& b, ClassId h) {
  const auto& m = b.ring().marks();
  std::int64_t s = 0;
  for (ClassId k = 0; k < m.size(); ++k) s += b.coeff(k) * m(k, h);
  return s;
}

BurnsideElement from_marks(const RingPtr& ring, std::span<const std::int64_t> marks) {
  const auto& m = ring->marks();
  const std::size_t n = m.size();
  if (marks.size() != n) throw DomainError("mark vector has wrong length");
  std::vector<std::int64_t> a(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    std::int64_t rest = marks[i];
    for (ClassId k = i + 1; k < n; ++k) rest -= a[k] * m(k, i);
    a[i] = exact_div(rest, m(i, i), "mark inversion at " + ring->lattice().class_label(i));
  }
  return ring->element(std::move(a));
}

BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) {
  if (!a.ring().same_group(b.ring())) throw DomainError("Burnside elements over different groups");
  auto ma = mark_vector(a);
  auto mb = mark_vector(b);
  for (std::size_t i = 0; i < ma.size(); ++i) ma[i] *= mb[i];
  return from_marks(a.ring_ptr(), ma);
}

std::int64_t cardinality(const BurnsideElement& b) {
  const auto& lat = b.ring().lattice();
  const auto order = static_cast<std::int64_t>(b.ring().group().order());
  std::int64_t s = 0;
  for (ClassId c = 0; c < b.ring().rank(); ++c)
    s += b.coeff(c) * (order / static_cast<std::int64_t>(lat.class_order(c)));
  return s;
}

BurnsideElement restrict(const BurnsideElement& b, SubgroupId h) {
  return restrict(b, b.ring().subgroup_ring(h));
}

BurnsideElement restrict(const BurnsideElement& b, const RingPtr& subring) {
  const BurnsideRing& ring = b.ring();
  if (!subring->parent() || !subring->parent()->same_group(ring))
    throw DomainError("restrict: not a subgroup ring of this group");
  const FiniteGroup& g = ring.group();
  const SubgroupLattice& lat = ring.lattice();
  const auto& emb = subring->embedding();
  std::vector<ElementId> local(g.order(), static_cast<ElementId>(-1));
  for (ElementId i = 0; i < emb.size(); ++i) local[emb[i]] = i;

  std::vector<std::int64_t> out(subring->rank(), 0);
  for (ClassId c = 0; c < ring.rank(); ++c) {
    if (b.coeff(c) == 0) continue;
    const auto& reps = ring.coset_representatives(c);
    std::vector<bool> seen(reps.size(), false);
    for (std::size_t start = 0; start < reps.size(); ++start) {
      if (seen[start]) continue;
      // Orbit of this coset under H; its stabilizer is H meet x K x^-1.
      std::vector<std::size_t> orbit{start};
      seen[start] = true;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (ElementId gen : subring->group().generators()) {
          std::size_t next = ring.coset_of(c, g.multiply(emb[gen], reps[orbit[i]]));
          if (!seen[next]) {
            seen[next] = true;
            orbit.push_back(next);
          }
        }
      const Subgroup& conj = lat.subgroup(ring.coset_conjugates(c)[start]);
      std::vector<ElementId> stab;
      for (ElementId e : emb)
        if (conj.contains(e)) stab.push_back(local[e]);
      auto sid = subring->lattice().find(stab);
      if (!sid) throw DomainError("restrict: stabilizer is not a subgroup");
      out[subring->lattice().class_of(*sid)] += b.coeff(c);
    }
  }
  return subring->element(std::move(out));
}

BurnsideElement induce(const BurnsideElement& b) {
  if (!b.ring().parent()) throw DomainError("induce: element does not live on a subgroup");
  return induce(b, b.ring().parent());
}

BurnsideElement induce(const BurnsideElement& b, const RingPtr& target) {
  const BurnsideRing& sub = b.ring();
  if (!sub.parent() || !sub.parent()->same_group(*target))
    throw DomainError("induce: source is not a subgroup ring of the target group");
  const auto& emb = sub.embedding();
  std::vector<std::int64_t> out(target->rank(), 0);
  for (ClassId c = 0; c < sub.rank(); ++c) {
    if (b.coeff(c) == 0) continue;
    std::vector<ElementId> members;
    for (ElementId e : sub.lattice().subgroup(sub.lattice().representative(c)).members)
      members.push_back(emb[e]);
    auto k = target->lattice().find(members);
    if (!k) throw DomainError("induce: subgroup not found in target lattice");
    out[target->lattice().class_of(*k)] += b.coeff(c);
  }
  return target->element(std::move(out));
}

std::vector<std::int64_t> stabilizer_weights(const BurnsideElement& b) {
  const BurnsideRing& ring = b.ring();
  std::vector<std::int64_t> u(ring.lattice().size(), 0);
  for (ClassId c = 0; c < ring.rank(); ++c) {
    if (b.coeff(c) == 0) continue;
    for (SubgroupId k : ring.coset_conjugates(c)) u[k] += b.coeff(c);
  }
  return u;
}

void check_tuple_bound(std::size_t group_order, int k) {
  if (k < 0 || k > 3) throw DomainError("r_k: k must be in 0..3");
  double tuples = 1;
  for (int i = 0; i <= k; ++i) tuples *= static_cast<double>(group_order);
  if (tuples > 1e8) throw DomainError("r_k: |G|^(k+1) exceeds 1e8");
}

namespace {

// Sum over pairwise commuting tuples (g_0..g_depth_left) drawn from `cand` of
// sum_{K in active, K contains all g_i} weight[K].
std::int64_t commuting_sum(const FiniteGroup& g, const SubgroupLattice& lat,
                           const std::vector<std::int64_t>& weight,
                           const std::vector<SubgroupId>& active, const std::vector<ElementId>& cand,
                           int depth_left) {
  if (active.empty()) return 0;
  if (depth_left == 0) {
    std::int64_t s = 0;
    for (SubgroupId k : active) {
      const Subgroup& ks = lat.subgroup(k);
      std::int64_t inside = 0;
      for (ElementId x : cand) inside += ks.contains(x) ? 1 : 0;
      s += weight[k] * inside;
    }
    return s;
  }
  std::int64_t s = 0;
  for (ElementId x : cand) {
    std::vector<SubgroupId> next_active;
    for (SubgroupId k : active)
      if (lat.subgroup(k).contains(x)) next_active.push_back(k);
    if (next_active.empty()) continue;
    std::vector<ElementId> next_cand;  // centralizer pruning
    for (ElementId y : cand)
      if (g.multiply(x, y) == g.multiply(y, x)) next_cand.push_back(y);
    s += commuting_sum(g, lat, weight, next_active, next_cand, depth_left - 1);
  }
  return s;
}

}  // namespace

std::int64_t r_k(const BurnsideElement& b, int k) {
  const FiniteGroup& g = b.ring().group();
  check_tuple_bound(g.order(), k);
  const auto weight = stabilizer_weights(b);
  std::vector<SubgroupId> active;
  for (SubgroupId h = 0; h < weight.size(); ++h)
    if (weight[h] != 0) active.push_back(h);
  std::vector<ElementId> all(g.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  const std::int64_t total = commuting_sum(g, b.ring().lattice(), weight, active, all, k);
  return exact_div(total, static_cast<std::int64_t>(g.order()), "r_k");
}

ClassFunction permutation_character(const BurnsideElement& b) {
  const FiniteGroup& g = b.ring().group();
  const auto weight = stabilizer_weights(b);
  ClassFunction chi{b.ring_ptr(), {}};
  for (const auto& cls : g.conjugacy_classes()) {
    const ElementId x = cls.front();
    std::int64_t v = 0;
    for (SubgroupId h = 0; h < weight.size(); ++h)
      if (weight[h] != 0 && b.ring().lattice().subgroup(h).contains(x)) v += weight[h];
    chi.values.emplace_back(v);
  }
  return chi;
}

}  // namespace eqidx
