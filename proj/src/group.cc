#include "eqidx/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace eqidx {

namespace {

std::vector<int> normalize_permutation(std::size_t degree, const std::vector<int>& images,
                                       bool one_based) {
  if (images.size() != degree)
    throw DomainError("permutation generator has " + std::to_string(images.size()) +
                      " images, expected " + std::to_string(degree));
  std::vector<int> out(degree);
  std::vector<bool> seen(degree, false);
  for (std::size_t i = 0; i < degree; ++i) {
    int v = images[i] - (one_based ? 1 : 0);
    if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
      throw DomainError("non-invertible permutation generator");
    seen[v] = true;
    out[i] = v;
  }
  return out;
}

bool uses_one_based(std::size_t degree, const std::vector<std::vector<int>>& gens) {
  bool any_zero = false;
  bool any_top = false;
  for (const auto& g : gens)
    for (int v : g) {
      any_zero |= (v == 0);
      any_top |= (v == static_cast<int>(degree));
    }
  return any_top && !any_zero;
}

std::uint64_t pack(const std::vector<int>& p) {
  std::uint64_t key = 0;
  for (int v : p) key = (key << 4) | static_cast<std::uint64_t>(v);
  return key;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t q = b / g;
  if (a > static_cast<std::int64_t>(1e15) / q)
    throw DomainError("phase denominators too large");
  return a * q;
}

// Builds the table from canonically ordered elements, given a product rule
// that returns the index of a*b.
template <class Product>
std::vector<ElementId> build_table(std::size_t n, Product product) {
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = product(a, b);
  return table;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::size_t degree,
                                           const std::vector<std::vector<int>>& generators,
                                           std::size_t max_order) {
  if (degree == 0 || degree > 16)
    throw DomainError("permutation degree must be in 1..16");
  const bool one_based = uses_one_based(degree, generators);
  std::vector<std::vector<int>> gens;
  for (const auto& g : generators) gens.push_back(normalize_permutation(degree, g, one_based));

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::unordered_map<std::uint64_t, std::size_t> seen{{pack(id), 0}};
  std::vector<std::vector<int>> elems{id};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      std::vector<int> prod(degree);  // (elem * g)(x) = elem(g(x))
      for (std::size_t x = 0; x < degree; ++x) prod[x] = elems[i][g[x]];
      if (seen.emplace(pack(prod), elems.size()).second) {
        elems.push_back(std::move(prod));
        if (elems.size() > max_order)
          throw DomainError("group order exceeds bound " + std::to_string(max_order));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  std::unordered_map<std::uint64_t, ElementId> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[pack(elems[i])] = static_cast<ElementId>(i);

  FiniteGroup g;
  g.kind_ = Kind::Permutation;
  g.degree_ = degree;
  const std::size_t n = elems.size();
  g.table_ = build_table(n, [&](std::size_t a, std::size_t b) {
    std::vector<int> prod(degree);
    for (std::size_t x = 0; x < degree; ++x) prod[x] = elems[a][elems[b][x]];
    return index.at(pack(prod));
  });
  for (const auto& gen : gens) {
    ElementId e = index.at(pack(gen));
    if (e != 0 && std::find(g.generators_.begin(), g.generators_.end(), e) == g.generators_.end())
      g.generators_.push_back(e);
  }
  g.perms_ = std::move(elems);
  g.finish(n);
  return g;
}

FiniteGroup FiniteGroup::from_phases(std::size_t dimension,
                                     const std::vector<std::vector<Rational>>& generators,
                                     std::size_t max_order) {
  std::int64_t den = 1;
  for (const auto& gen : generators) {
    if (gen.size() != dimension)
      throw DomainError("phase generator has wrong number of coordinates");
    for (const auto& a : gen) {
      std::int64_t d = denominator_i64(a);
      if (d > 1000000) throw DomainError("phase denominator exceeds 10^6");
      den = checked_lcm(den, d);
    }
  }
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& gen : generators) {
    std::vector<std::int64_t> v(dimension);
    for (std::size_t j = 0; j < dimension; ++j) v[j] = numerator_i64(mod_one(gen[j]) * den);
    gens.push_back(std::move(v));
  }

  std::vector<std::int64_t> zero(dimension, 0);
  std::unordered_map<std::vector<std::int64_t>, std::size_t, VecHash> seen{{zero, 0}};
  std::vector<std::vector<std::int64_t>> elems{zero};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : gens) {
      std::vector<std::int64_t> sum(dimension);
      for (std::size_t j = 0; j < dimension; ++j) sum[j] = (elems[i][j] + gen[j]) % den;
      if (seen.emplace(sum, elems.size()).second) {
        elems.push_back(std::move(sum));
        if (elems.size() > max_order)
          throw DomainError("group order exceeds bound " + std::to_string(max_order));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  std::unordered_map<std::vector<std::int64_t>, ElementId, VecHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<ElementId>(i);

  FiniteGroup g;
  g.kind_ = Kind::Diagonal;
  g.degree_ = dimension;
  g.denominator_ = den;
  const std::size_t n = elems.size();
  std::vector<std::int64_t> sum(dimension);
  g.table_ = build_table(n, [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < dimension; ++j) sum[j] = (elems[a][j] + elems[b][j]) % den;
    return index.at(sum);
  });
  for (const auto& gen : gens) {
    ElementId e = index.at(gen);
    if (e != 0 && std::find(g.generators_.begin(), g.generators_.end(), e) == g.generators_.end())
      g.generators_.push_back(e);
  }
  g.phase_nums_ = std::move(elems);
  g.finish(n);
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw DomainError("empty multiplication table");
  if (n > kMaxGroupOrder) throw DomainError("group order exceeds bound");
  for (const auto& row : table) {
    if (row.size() != n) throw DomainError("multiplication table is not square");
    for (auto v : row)
      if (v >= n) throw DomainError("multiplication table is not closed");
  }
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) id = e;
  }
  if (id == n) throw DomainError("multiplication table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = table[a][b] == id && table[b][a] == id;
    if (!has_inverse) throw DomainError("element " + std::to_string(a) + " has no inverse");
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table[table[a][b]][c] != table[a][table[b][c]])
      throw DomainError("multiplication table is not associative");
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int t = 0; t < 200000; ++t) assoc(pick(rng), pick(rng), pick(rng));
  }

  // Relabel: identity first, the rest in the given order.
  std::vector<std::size_t> order{id};
  for (std::size_t a = 0; a < n; ++a)
    if (a != id) order.push_back(a);
  std::vector<ElementId> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[order[i]] = static_cast<ElementId>(i);

  FiniteGroup g;
  g.kind_ = Kind::Table;
  g.table_ = build_table(n, [&](std::size_t a, std::size_t b) {
    return relabel[table[order[a]][order[b]]];
  });
  g.inverse_.assign(n, 0);  // closure() needs order()
  // Greedy generating set in element order.
  std::vector<ElementId> covered{0};
  for (ElementId e = 1; e < n; ++e) {
    if (std::binary_search(covered.begin(), covered.end(), e)) continue;
    g.generators_.push_back(e);
    covered = g.closure(g.generators_);
  }
  g.finish(n);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}); }

void FiniteGroup::finish(std::size_t n) {
  inverse_.assign(n, 0);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inverse_[a] = b;
        break;
      }
  abelian_ = true;
  for (ElementId a = 0; a < n && abelian_; ++a)
    for (ElementId b = a + 1; b < n && abelian_; ++b)
      abelian_ = table_[a * n + b] == table_[b * n + a];

  class_of_.assign(n, static_cast<std::size_t>(-1));
  classes_.clear();
  for (ElementId a = 0; a < n; ++a) {
    if (class_of_[a] != static_cast<std::size_t>(-1)) continue;
    std::vector<ElementId> cls{a};
    class_of_[a] = classes_.size();
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (ElementId g : generators_) {
        ElementId c = conjugate(g, cls[i]);
        if (class_of_[c] == static_cast<std::size_t>(-1)) {
          class_of_[c] = classes_.size();
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

const std::vector<int>& FiniteGroup::permutation(ElementId e) const {
  if (kind_ != Kind::Permutation) throw DomainError("not a permutation group");
  return perms_.at(e);
}

std::vector<Rational> FiniteGroup::phases(ElementId e) const {
  if (kind_ != Kind::Diagonal) throw DomainError("not a diagonal group");
  std::vector<Rational> out;
  for (auto num : phase_nums_.at(e)) out.emplace_back(num, denominator_);
  return out;
}

std::span<const std::int64_t> FiniteGroup::phase_numerators(ElementId e) const {
  if (kind_ != Kind::Diagonal) throw DomainError("not a diagonal group");
  return phase_nums_.at(e);
}

std::vector<ElementId> FiniteGroup::closure(std::span<const ElementId> gens) const {
  std::vector<bool> in(order(), false);
  std::vector<ElementId> members{identity()};
  in[identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (ElementId g : gens) {
      ElementId p = multiply(members[i], g);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool FiniteGroup::is_subgroup(std::span<const ElementId> members) const {
  if (members.empty()) return false;
  std::vector<bool> in(order(), false);
  for (ElementId m : members) {
    if (m >= order() || in[m]) return false;
    in[m] = true;
  }
  if (!in[identity()]) return false;
  for (ElementId a : members) {
    if (!in[inverse(a)]) return false;
    for (ElementId b : members)
      if (!in[multiply(a, b)]) return false;
  }
  return true;
}

FiniteGroup FiniteGroup::induced_subgroup(std::span<const ElementId> members) const {
  if (!is_subgroup(members)) throw DomainError("not a subgroup");
  std::vector<ElementId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  std::vector<ElementId> local(order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[sorted[i]] = static_cast<ElementId>(i);

  FiniteGroup g;
  g.kind_ = kind_;
  g.degree_ = degree_;
  g.denominator_ = denominator_;
  g.table_ = build_table(n, [&](std::size_t a, std::size_t b) {
    return local[multiply(sorted[a], sorted[b])];
  });
  for (ElementId m : sorted) {
    if (kind_ == Kind::Permutation) g.perms_.push_back(perms_[m]);
    if (kind_ == Kind::Diagonal) g.phase_nums_.push_back(phase_nums_[m]);
  }
  g.inverse_.assign(n, 0);
  std::vector<ElementId> covered{0};
  for (ElementId e = 1; e < n; ++e) {
    if (std::binary_search(covered.begin(), covered.end(), e)) continue;
    g.generators_.push_back(e);
    covered = g.closure(g.generators_);
  }
  if (kind_ == Kind::Diagonal && n > 0) {
    // Reduce to the smallest common denominator so that equal groups compare equal.
    std::int64_t den = 1;
    for (const auto& v : g.phase_nums_)
      for (auto num : v) den = std::lcm(den, denominator_ / std::gcd(num, denominator_));
    const std::int64_t scale = denominator_ / den;
    for (auto& v : g.phase_nums_)
      for (auto& num : v) num /= scale;
    g.denominator_ = den;
  }
  g.finish(n);
  return g;
}

std::string FiniteGroup::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) { h = (h ^ x) * 1099511628211ull; };
  mix(static_cast<std::uint64_t>(kind_));
  mix(order());
  for (auto v : table_) mix(v);
  for (const auto& p : perms_)
    for (int v : p) mix(static_cast<std::uint64_t>(v));
  mix(static_cast<std::uint64_t>(denominator_));
  for (const auto& p : phase_nums_)
    for (auto v : p) mix(static_cast<std::uint64_t>(v));
  std::ostringstream os;
  os << "G" << order() << "_" << std::hex << (h & 0xffffffffull);
  return os.str();
}

std::string FiniteGroup::element_label(ElementId e) const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Permutation: {
      os << "[";
      for (std::size_t i = 0; i < degree_; ++i) os << (i ? "," : "") << perms_[e][i];
      os << "]";
      break;
    }
    case Kind::Diagonal: {
      os << "(";
      auto ph = phases(e);
      for (std::size_t i = 0; i < ph.size(); ++i) os << (i ? "," : "") << ph[i];
      os << ")";
      break;
    }
    case Kind::Table:
      os << "g" << e;
      break;
  }
  return os.str();
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  if (kind_ != other.kind_ || order() != other.order() || degree_ != other.degree_) return false;
  if (table_ != other.table_ || perms_ != other.perms_) return false;
  if (kind_ == Kind::Diagonal) {
    for (std::size_t e = 0; e < order(); ++e)
      for (std::size_t j = 0; j < degree_; ++j)
        if (phase_nums_[e][j] * other.denominator_ != other.phase_nums_[e][j] * denominator_)
          return false;
  }
  return true;
}

}  // namespace eqidx
