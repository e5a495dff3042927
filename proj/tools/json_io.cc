#include "json_io.hpp"

#include <regex>

namespace eqidx::cli {

std::string child(const std::string& path, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~')
      k += "~0";
    else if (c == '/')
      k += "~1";
    else
      k += c;
  }
  return path + "/" + k;
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(child(path, key), "missing field '" + key + "'");
  return *it;
}

const json* optional(const json& j, const std::string& key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, "expected an integer");
  return j.get<std::int64_t>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw InputError(path, "expected true or false");
  return j.get<bool>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_object()) {
    const auto num = as_int(require(j, "num", path), child(path, "num"));
    const auto den = as_int(require(j, "den", path), child(path, "den"));
    if (den == 0) throw InputError(child(path, "den"), "zero denominator");
    return Rational(num, den);
  }
  if (j.is_string()) {
    static const std::regex re(R"(\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?)");
    std::smatch m;
    const auto s = j.get<std::string>();
    if (std::regex_match(s, m, re)) {
      const auto num = std::stoll(m[1].str());
      const auto den = m[2].matched ? std::stoll(m[2].str()) : 1LL;
      if (den == 0) throw InputError(path, "zero denominator");
      return Rational(num, den);
    }
  }
  throw InputError(path, "expected a rational: integer, \"a/b\" or {\"num\":a,\"den\":b}");
}

IntMatrix as_matrix(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected a matrix (array of rows)");
  IntMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = child(path, i);
    if (!j[i].is_array()) throw InputError(p, "expected a row");
    std::vector<std::int64_t> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(as_int(j[i][k], child(p, k)));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

std::vector<std::vector<int>> int_rows(const json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto p = child(path, i);
    if (!j[i].is_array()) throw InputError(p, "expected an array");
    std::vector<int> row;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      row.push_back(static_cast<int>(as_int(j[i][k], child(p, k))));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

FiniteGroup parse_group(const json& j, const std::string& path) {
  if (!j.is_object()) throw InputError(path, "expected a group object");
  if (auto* n = optional(j, "cyclic")) {
    const auto order = as_int(*n, child(path, "cyclic"));
    if (order < 1 || order > 16) throw InputError(child(path, "cyclic"), "cyclic order must be in 1..16");
    std::vector<int> p(order);
    for (int i = 0; i < order; ++i) p[i] = (i + 1) % static_cast<int>(order);
    return FiniteGroup::from_permutations(order, {p});
  }
  if (auto* gens = optional(j, "permutations")) {
    auto rows = int_rows(*gens, child(path, "permutations"));
    std::size_t degree = 0;
    if (auto* d = optional(j, "degree"))
      degree = static_cast<std::size_t>(as_int(*d, child(path, "degree")));
    else if (!rows.empty())
      degree = rows.front().size();
    return FiniteGroup::from_permutations(degree, rows);
  }
  if (auto* gens = optional(j, "phases")) {
    const auto p = child(path, "phases");
    if (!gens->is_array()) throw InputError(p, "expected an array of phase vectors");
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < gens->size(); ++i) {
      const auto& g = (*gens)[i];
      if (!g.is_array()) throw InputError(child(p, i), "expected a phase vector");
      std::vector<Rational> v;
      for (std::size_t k = 0; k < g.size(); ++k) v.push_back(as_rational(g[k], child(child(p, i), k)));
      out.push_back(std::move(v));
    }
    std::size_t dim = out.empty() ? 0 : out.front().size();
    if (auto* d = optional(j, "dim")) dim = static_cast<std::size_t>(as_int(*d, child(path, "dim")));
    return FiniteGroup::from_phases(dim, out);
  }
  if (auto* t = optional(j, "table")) {
    auto rows = int_rows(*t, child(path, "table"));
    std::vector<std::vector<std::size_t>> table;
    for (const auto& r : rows) {
      std::vector<std::size_t> row;
      for (int x : r) {
        if (x < 0) throw InputError(child(path, "table"), "negative entry");
        row.push_back(static_cast<std::size_t>(x));
      }
      table.push_back(std::move(row));
    }
    return FiniteGroup::from_table(table);
  }
  throw InputError(path, "group needs one of 'cyclic', 'permutations', 'phases', 'table'");
}

SubgroupId parse_subgroup(const SubgroupLattice& lat, const json& j, const std::string& path) {
  if (!j.is_string()) throw InputError(path, "expected a subgroup label");
  auto h = lat.find_label(j.get<std::string>());
  if (!h) throw InputError(path, "unknown subgroup label '" + j.get<std::string>() + "'");
  return *h;
}

ClassId parse_class(const SubgroupLattice& lat, const json& j, const std::string& path) {
  return lat.class_of(parse_subgroup(lat, j, path));
}

BurnsideElement parse_element(const RingPtr& ring, const json& j, const std::string& path) {
  if (j.is_object() && j.contains("terms")) return parse_element(ring, j["terms"], child(path, "terms"));
  std::vector<std::int64_t> coeffs(ring->rank(), 0);
  const auto& lat = ring->lattice();
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const auto p = child(path, key);
      coeffs[parse_class(lat, json(key), p)] += as_int(value, p);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto p = child(path, i);
      if (!j[i].is_array() || j[i].size() != 2) throw InputError(p, "expected [label, coefficient]");
      coeffs[parse_class(lat, j[i][0], child(p, 0))] += as_int(j[i][1], child(p, 1));
    }
  } else {
    throw InputError(path, "expected a Burnside ring element");
  }
  return ring->element(std::move(coeffs));
}

json to_json(const Rational& r) {
  return json{{"num", numerator_i64(r)}, {"den", denominator_i64(r)}};
}

json to_json(const BurnsideElement& b) {
  json terms = json::array();
  const auto& lat = b.ring().lattice();
  for (ClassId c = 0; c < b.ring().rank(); ++c)
    if (b.coeff(c) != 0) terms.push_back(json::array({lat.class_label(c), b.coeff(c)}));
  return json{{"terms", terms}, {"text", b.to_string()}};
}

}  // namespace eqidx::cli
