#include "eqidx/invertible.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace eqidx {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

[[noreturn]] void not_invertible(const std::string& why) {
  throw DomainError("not a sum of Fermat, chain and loop atoms: " + why);
}

// Gauss-Jordan over Q; returns det and fills inv (empty if singular).
BigInt invert(const IntMatrix& e, std::vector<std::vector<Rational>>& inv) {
  const std::size_t n = e.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = e[i][j];
    a[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) {
      inv.clear();
      return 0;
    }
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational m = a[r][col];
      for (std::size_t k = col; k < 2 * n; ++k) a[r][k] -= m * a[col][k];
    }
  }
  inv.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return boost::multiprecision::numerator(det);
}

struct RowShape {
  std::vector<std::size_t> lead;  // candidate leading variables
  std::size_t other[2] = {kNone, kNone};  // the pointer for each candidate
};

// Assigns a distinct leading variable to every row so that no variable is
// pointed at twice.
bool assign(const std::vector<RowShape>& rows, std::size_t i, std::vector<std::size_t>& lead_of,
            std::vector<bool>& used, std::vector<int>& indeg) {
  if (i == rows.size()) return true;
  for (std::size_t c = 0; c < rows[i].lead.size(); ++c) {
    const std::size_t v = rows[i].lead[c];
    const std::size_t p = rows[i].other[c];
    if (used[v] || (p != kNone && indeg[p] > 0)) continue;
    used[v] = true;
    if (p != kNone) ++indeg[p];
    lead_of[i] = v;
    if (assign(rows, i + 1, lead_of, used, indeg)) return true;
    used[v] = false;
    if (p != kNone) --indeg[p];
  }
  return false;
}

std::vector<Atom> decompose(const IntMatrix& e) {
  const std::size_t n = e.size();
  std::vector<RowShape> shapes(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j)
      if (e[i][j] != 0) support.push_back(j);
    if (support.empty()) not_invertible("monomial " + std::to_string(i) + " is constant");
    if (support.size() > 2)
      not_invertible("monomial " + std::to_string(i) + " has more than two variables");
    if (support.size() == 1) {
      shapes[i].lead = {support[0]};
      continue;
    }
    const std::size_t j = support[0], k = support[1];
    if (e[i][k] == 1) {
      shapes[i].other[shapes[i].lead.size()] = k;
      shapes[i].lead.push_back(j);
    }
    if (e[i][j] == 1) {
      shapes[i].other[shapes[i].lead.size()] = j;
      shapes[i].lead.push_back(k);
    }
    if (shapes[i].lead.empty())
      not_invertible("monomial " + std::to_string(i) + " has no variable with exponent 1");
  }

  std::vector<std::size_t> lead_of(n, kNone);
  std::vector<bool> used(n, false);
  std::vector<int> indeg(n, 0);
  if (!assign(shapes, 0, lead_of, used, indeg))
    not_invertible("no consistent choice of leading variables");

  std::vector<std::size_t> row_of(n), next(n, kNone);
  std::vector<int> in(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = lead_of[i];
    row_of[v] = i;
    for (std::size_t j = 0; j < n; ++j)
      if (j != v && e[i][j] != 0) {
        next[v] = j;
        ++in[j];
      }
  }

  std::vector<Atom> atoms;
  std::vector<bool> done(n, false);
  auto add = [&](Atom::Kind kind, std::size_t start) {
    Atom a{kind, {}, {}, {}};
    for (std::size_t v = start; v != kNone && !done[v]; v = next[v]) {
      done[v] = true;
      a.vars.push_back(v);
      a.rows.push_back(row_of[v]);
      a.exponents.push_back(e[row_of[v]][v]);
    }
    atoms.push_back(std::move(a));
  };
  for (std::size_t v = 0; v < n; ++v)
    if (in[v] == 0) add(next[v] == kNone ? Atom::Kind::Fermat : Atom::Kind::Chain, v);
  for (std::size_t v = 0; v < n; ++v)
    if (!done[v]) add(Atom::Kind::Loop, v);
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return *std::min_element(a.vars.begin(), a.vars.end()) <
           *std::min_element(b.vars.begin(), b.vars.end());
  });
  return atoms;
}

std::string variable_name(std::size_t j, std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w"};
  if (n <= 4) return names[j];
  return "x" + std::to_string(j + 1);
}

IntMatrix transposed(const IntMatrix& e) {
  IntMatrix t(e.size(), std::vector<std::int64_t>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j) t[j][i] = e[i][j];
  return t;
}

}  // namespace

const char* atom_kind_name(Atom::Kind k) {
  switch (k) {
    case Atom::Kind::Fermat:
      return "fermat";
    case Atom::Kind::Chain:
      return "chain";
    case Atom::Kind::Loop:
      return "loop";
  }
  return "?";
}

InvertiblePolynomial InvertiblePolynomial::validate(IntMatrix e) {
  const std::size_t n = e.size();
  if (n > kMaxVariables)
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  for (const auto& row : e) {
    if (row.size() != n) throw DomainError("exponent matrix is not square");
    for (auto x : row)
      if (x < 0) throw DomainError("negative exponent");
  }
  InvertiblePolynomial f;
  BigInt det = invert(e, f.inverse_);
  if (det == 0) throw DomainError("exponent matrix is singular");
  if (abs(det) > 1000000000) throw DomainError("|det E| too large");
  f.det_ = det.convert_to<std::int64_t>();
  f.atoms_ = decompose(e);
  f.weights_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.weights_[i] += f.inverse_[i][j];
  for (const auto& q : f.weights_)
    if (q <= 0 || q > 1) throw DomainError("weight " + q.str() + " outside (0, 1]");
  f.e_ = std::move(e);
  return f;
}

std::string InvertiblePolynomial::to_string() const {
  const std::size_t n = num_variables();
  if (n == 0) return "0";
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += " + ";
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (e_[i][j] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += variable_name(j, n);
      if (e_[i][j] != 1) out += "^" + std::to_string(e_[i][j]);
    }
  }
  return out;
}

std::int64_t milnor_number(const InvertiblePolynomial& f) {
  Rational mu = 1;
  for (const auto& q : f.weights()) mu *= 1 / q - 1;
  return to_integer(mu, "Milnor number");
}

FiniteGroup symmetry_group(const InvertiblePolynomial& f, std::size_t max_order) {
  const std::size_t n = f.num_variables();
  const auto order = static_cast<std::size_t>(f.det() < 0 ? -f.det() : f.det());
  if (order > max_order)
    throw DomainError("symmetry group order " + std::to_string(order) + " exceeds bound " +
                      std::to_string(max_order));
  std::vector<std::vector<Rational>> gens(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gens[j][i] = f.inverse()[i][j];
  FiniteGroup g = FiniteGroup::from_phases(n, gens, max_order);
  if (g.order() != order) throw DomainError("symmetry group has order different from |det E|");
  return g;
}

InvertiblePolynomial transpose(const InvertiblePolynomial& f) {
  return InvertiblePolynomial::validate(transposed(f.exponents()));
}

bool is_symmetry(const InvertiblePolynomial& f, const std::vector<Rational>& a) {
  const auto& e = f.exponents();
  if (a.size() != e.size()) return false;
  for (const auto& row : e) {
    Rational s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * a[j];
    if (boost::multiprecision::denominator(s) != 1) return false;
  }
  return true;
}

Rational pairing(const InvertiblePolynomial& f, const std::vector<Rational>& a,
                 const std::vector<Rational>& b) {
  const auto t = InvertiblePolynomial::validate(transposed(f.exponents()));
  if (!is_symmetry(f, a)) throw DomainError("pairing: first argument is not a symmetry of f");
  if (!is_symmetry(t, b))
    throw DomainError("pairing: second argument is not a symmetry of the transpose");
  const auto& e = f.exponents();
  Rational s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    Rational ea = 0;
    for (std::size_t j = 0; j < e.size(); ++j) ea += e[i][j] * a[j];
    s += ea * b[i];
  }
  return mod_one(s);
}

std::vector<std::size_t> fixed_locus(const FiniteGroup& g, std::span<const ElementId> members) {
  if (g.kind() != FiniteGroup::Kind::Diagonal) throw DomainError("fixed_locus: not a diagonal group");
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < g.degree(); ++j) {
    bool fixed = true;
    for (ElementId a : members) fixed = fixed && g.phase_numerators(a)[j] == 0;
    if (fixed) s.push_back(j);
  }
  return s;
}

InvertiblePolynomial restrict_to(const InvertiblePolynomial& f, const std::vector<std::size_t>& s) {
  const auto& e = f.exponents();
  const std::size_t n = e.size();
  std::vector<bool> in(n, false);
  for (std::size_t j : s) {
    if (j >= n || in[j]) throw DomainError("restrict_to: bad coordinate set");
    in[j] = true;
  }
  std::vector<std::size_t> cols(s);
  std::sort(cols.begin(), cols.end());
  IntMatrix out;
  for (const auto& row : e) {
    bool inside = true;
    for (std::size_t j = 0; j < n; ++j) inside = inside && (row[j] == 0 || in[j]);
    if (!inside) continue;
    std::vector<std::int64_t> r;
    for (std::size_t j : cols) r.push_back(row[j]);
    out.push_back(std::move(r));
  }
  if (out.size() != cols.size())
    throw DomainError("restrict_to: " + std::to_string(out.size()) + " monomials on " +
                      std::to_string(cols.size()) + " coordinates");
  try {
    return InvertiblePolynomial::validate(std::move(out));
  } catch (const DomainError& err) {
    throw DomainError(std::string("restrict_to: restriction is not invertible (") + err.what() + ")");
  }
}

namespace {

std::int64_t chi_of_fixed(const InvertiblePolynomial& f, const std::vector<std::size_t>& s,
                          std::int64_t* mu_out = nullptr) {
  if (s.empty()) {
    if (mu_out) *mu_out = 1;
    return 0;
  }
  const std::int64_t mu = milnor_number(restrict_to(f, s));
  if (mu_out) *mu_out = mu;
  return s.size() % 2 == 1 ? 1 + mu : 1 - mu;
}

void check_symmetries(const InvertiblePolynomial& f, const FiniteGroup& g) {
  if (g.kind() != FiniteGroup::Kind::Diagonal || g.degree() != f.num_variables())
    throw DomainError("group does not act diagonally on the variables of f");
  const auto& e = f.exponents();
  const std::int64_t den = g.common_denominator();
  for (ElementId a : g.generators()) {
    const auto num = g.phase_numerators(a);
    for (const auto& row : e) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * num[j];
      if (s % den != 0) throw DomainError("group element " + g.element_label(a) + " is not a symmetry of f");
    }
  }
}

}  // namespace

std::int64_t chi_milnor_fixed(const InvertiblePolynomial& f, const FiniteGroup& g,
                              std::span<const ElementId> members) {
  check_symmetries(f, g);
  return chi_of_fixed(f, fixed_locus(g, members));
}

MilnorData milnor_data(const InvertiblePolynomial& f, const RingPtr& ring) {
  const FiniteGroup& g = ring->group();
  check_symmetries(f, g);
  const auto& lat = ring->lattice();
  MilnorData d{{}, ring->zero()};
  std::map<std::vector<std::size_t>, std::pair<std::int64_t, std::int64_t>> memo;
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    auto s = fixed_locus(g, lat.subgroup(h).members);
    auto it = memo.find(s);
    if (it == memo.end()) {
      std::int64_t mu = 1;
      const std::int64_t chi = chi_of_fixed(f, s, &mu);
      it = memo.emplace(s, std::make_pair(mu, chi)).first;
    }
    d.per_subgroup.push_back({std::move(s), it->second.first, it->second.second});
  }

  std::vector<std::int64_t> coeffs(ring->rank(), 0);
  for (ClassId c = 0; c < ring->rank(); ++c) {
    const SubgroupId h = lat.representative(c);
    // chi of the points with isotropy exactly h
    std::int64_t exact = 0;
    for (const auto& [k, m] : lat.mu_sub_row(h)) exact += m * d.per_subgroup[k].chi;
    coeffs[c] = exact_div(static_cast<std::int64_t>(lat.subgroup(h).order()) * exact,
                          static_cast<std::int64_t>(lat.subgroup(lat.normalizer(h)).order()),
                          "orbit count of isotropy " + lat.label(h));
  }
  d.chi_g = ring->element(std::move(coeffs));
  return d;
}

BurnsideElement chi_G_milnor(const InvertiblePolynomial& f, const RingPtr& ring) {
  return milnor_data(f, ring).chi_g;
}

BurnsideElement index_df(const InvertiblePolynomial& f, const RingPtr& ring) {
  return ring->one() - chi_G_milnor(f, ring);
}

DualityPair::DualityPair(const InvertiblePolynomial& f, std::int64_t max_order)
    : f_(f), ft_(transpose(f)) {
  const std::int64_t order = f.det() < 0 ? -f.det() : f.det();
  if (order > max_order)
    throw DomainError("|det E| = " + std::to_string(order) + " exceeds the duality bound " +
                      std::to_string(max_order));
  ring_ = BurnsideRing::create(symmetry_group(f_));
  dual_ring_ = BurnsideRing::create(symmetry_group(ft_));
  const FiniteGroup& g = ring_->group();
  const FiniteGroup& gt = dual_ring_->group();
  const auto& e = f_.exponents();
  const std::size_t n = e.size();
  modulus_ = gt.common_denominator();
  table_.assign(g.order() * gt.order(), 0);
  for (ElementId a = 0; a < g.order(); ++a) {
    const auto alpha = g.phase_numerators(a);
    std::vector<std::int64_t> ea(n, 0);  // E a, integral
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += e[i][j] * alpha[j];
      ea[i] = s / g.common_denominator();
    }
    for (ElementId b = 0; b < gt.order(); ++b) {
      const auto beta = gt.phase_numerators(b);
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s = (s + ea[i] * beta[i]) % modulus_;
      table_[a * gt.order() + b] = (s + modulus_) % modulus_;
    }
  }
  // G_{f~} -> Hom(G_f, Q/Z) must be injective, and the orders agree
  if (g.order() != gt.order()) throw DomainError("symmetry groups of f and its transpose differ in order");
  for (ElementId b = 1; b < gt.order(); ++b) {
    bool nonzero = false;
    for (ElementId a = 0; a < g.order() && !nonzero; ++a) nonzero = table_[a * gt.order() + b] != 0;
    if (!nonzero) throw DomainError("pairing is degenerate at " + gt.element_label(b));
  }
}

Rational DualityPair::pairing(ElementId a, ElementId b) const {
  return Rational(table_[a * dual_ring_->group().order() + b], modulus_);
}

SubgroupId DualityPair::dual_subgroup(SubgroupId h) const {
  const auto& members = ring_->lattice().subgroup(h).members;
  const std::size_t m = dual_ring_->group().order();
  std::vector<ElementId> ann;
  for (ElementId b = 0; b < m; ++b)
    if (std::all_of(members.begin(), members.end(),
                    [&](ElementId a) { return table_[a * m + b] == 0; }))
      ann.push_back(b);
  auto k = dual_ring_->lattice().find(ann);
  if (!k) throw DomainError("annihilator is not a subgroup");
  return *k;
}

SubgroupId DualityPair::dual_subgroup_of_dual(SubgroupId k) const {
  const auto& members = dual_ring_->lattice().subgroup(k).members;
  const std::size_t m = dual_ring_->group().order();
  std::vector<ElementId> ann;
  for (ElementId a = 0; a < ring_->group().order(); ++a)
    if (std::all_of(members.begin(), members.end(),
                    [&](ElementId b) { return table_[a * m + b] == 0; }))
      ann.push_back(a);
  auto h = ring_->lattice().find(ann);
  if (!h) throw DomainError("annihilator is not a subgroup");
  return *h;
}

bool DualityReport::r1_equal() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const DualSubgroupRow& p) { return p.r1 == p.r1_dual; });
}

bool DualityReport::r1_equal_signed() const {
  const std::int64_t sign = num_variables % 2 == 0 ? 1 : -1;
  return std::all_of(pairs.begin(), pairs.end(),
                     [&](const DualSubgroupRow& p) { return p.r1 == sign * p.r1_dual; });
}

DualityReport duality_check(const InvertiblePolynomial& f) { return duality_check(DualityPair(f)); }

DualityReport duality_check(const DualityPair& pair) {
  const auto& ring = pair.ring();
  const auto& dual = pair.dual_ring();
  DualityReport rep{pair.f().num_variables(), r_k(index_df(pair.f(), ring), 0),
                    r_k(index_df(pair.dual(), dual), 0), {}};
  for (SubgroupId h = 0; h < ring->lattice().size(); ++h) {
    const SubgroupId ht = pair.dual_subgroup(h);
    const auto r1 = r_k(index_df(pair.f(), ring->subgroup_ring(h)), 1);
    const auto r1t = r_k(index_df(pair.dual(), dual->subgroup_ring(ht)), 1);
    rep.pairs.push_back({h, ht, r1, r1t});
  }
  return rep;
}

}  // namespace eqidx
