#pragma once

// Invertible polynomials assembled from Fermat, chain and loop atoms.

#include <cstdint>
#include <string>
#include <vector>

#include "eqidx/invertible.hpp"

namespace eqidx::testing {

struct AtomSpec {
  Atom::Kind kind;
  std::vector<std::int64_t> a;

  std::size_t size() const { return a.size(); }
  std::int64_t det() const {
    std::int64_t p = 1;
    for (auto x : a) p *= x;
    if (kind == Atom::Kind::Loop) p -= (a.size() % 2 == 0 ? 1 : -1);
    return p;
  }
};

/// Block diagonal exponent matrix of the atoms, in the given order.
inline IntMatrix assemble(const std::vector<AtomSpec>& atoms) {
  std::size_t n = 0;
  for (const auto& at : atoms) n += at.size();
  IntMatrix e(n, std::vector<std::int64_t>(n, 0));
  std::size_t off = 0;
  for (const auto& at : atoms) {
    const std::size_t k = at.size();
    for (std::size_t i = 0; i < k; ++i) {
      e[off + i][off + i] = at.a[i];
      if (at.kind == Atom::Kind::Chain && i + 1 < k) e[off + i][off + i + 1] = 1;
      if (at.kind == Atom::Kind::Loop) e[off + i][off + (i + 1) % k] = 1;
    }
    off += k;
  }
  return e;
}

inline void exponent_tuples(std::size_t k, std::int64_t max_product, std::vector<std::int64_t>& cur,
                            std::vector<std::vector<std::int64_t>>& out) {
  std::int64_t p = 1;
  for (auto x : cur) p *= x;
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t a = 2; p * a <= max_product; ++a) {
    cur.push_back(a);
    exponent_tuples(k, max_product, cur, out);
    cur.pop_back();
  }
}

/// All atoms on at most max_vars variables with exponents >= 2 and |det| <=
/// max_det. Loops are listed once per rotation class.
inline std::vector<AtomSpec> atom_catalogue(std::size_t max_vars, std::int64_t max_det) {
  std::vector<AtomSpec> out;
  for (std::int64_t a = 2; a <= max_det; ++a) out.push_back({Atom::Kind::Fermat, {a}});
  for (std::size_t k = 2; k <= max_vars; ++k) {
    std::vector<std::vector<std::int64_t>> tuples;
    std::vector<std::int64_t> cur;
    exponent_tuples(k, max_det + 1, cur, tuples);
    for (const auto& t : tuples) {
      AtomSpec chain{Atom::Kind::Chain, t};
      if (chain.det() <= max_det) out.push_back(chain);
      AtomSpec loop{Atom::Kind::Loop, t};
      bool canonical = true;
      for (std::size_t r = 1; r < k; ++r) {
        std::vector<std::int64_t> rot(t.begin() + r, t.end());
        rot.insert(rot.end(), t.begin(), t.begin() + r);
        canonical = canonical && t <= rot;
      }
      if (canonical && loop.det() <= max_det) out.push_back(loop);
    }
  }
  return out;
}

struct PolyFixture {
  std::string name;
  IntMatrix e;
};

inline std::string describe(const std::vector<AtomSpec>& atoms) {
  std::string s;
  for (const auto& at : atoms) {
    if (!s.empty()) s += "+";
    s += atom_kind_name(at.kind);
    s += "(";
    for (std::size_t i = 0; i < at.a.size(); ++i) s += (i ? "," : "") + std::to_string(at.a[i]);
    s += ")";
  }
  return s;
}

/// Sums of atoms on at most max_vars variables in total with |det| <= max_det.
inline std::vector<PolyFixture> polynomial_suite(std::size_t max_vars, std::int64_t max_det) {
  const auto cat = atom_catalogue(max_vars, max_det);
  std::vector<PolyFixture> out;
  std::vector<AtomSpec> cur;
  auto rec = [&](auto&& self, std::size_t start, std::size_t vars, std::int64_t det) -> void {
    if (!cur.empty()) out.push_back({describe(cur), assemble(cur)});
    for (std::size_t i = start; i < cat.size(); ++i) {
      const auto& at = cat[i];
      if (vars + at.size() > max_vars || det * at.det() > max_det) continue;
      cur.push_back(at);
      self(self, i, vars + at.size(), det * at.det());
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 1);
  return out;
}

/// One- and two-variable fixtures for the Milnor number oracle: Fermat
/// exponents up to 12, chains and loops with entries up to 6.
inline std::vector<PolyFixture> milnor_suite() {
  std::vector<PolyFixture> out;
  for (std::int64_t a = 1; a <= 12; ++a) out.push_back({describe({{Atom::Kind::Fermat, {a}}}), {{a}}});
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = a; b <= 12; ++b) {
      std::vector<AtomSpec> atoms{{Atom::Kind::Fermat, {a}}, {Atom::Kind::Fermat, {b}}};
      out.push_back({describe(atoms), assemble(atoms)});
    }
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 2; b <= 6; ++b) {
      std::vector<AtomSpec> chain{{Atom::Kind::Chain, {a, b}}};
      out.push_back({describe(chain), assemble(chain)});
      if (a >= 2 && a <= b) {
        std::vector<AtomSpec> loop{{Atom::Kind::Loop, {a, b}}};
        out.push_back({describe(loop), assemble(loop)});
      }
    }
  return out;
}

/// The worked examples: x^2+y^3, x^2y+y^3 and its transpose x^2+xy^3.
inline IntMatrix sum_x2_y3() { return {{2, 0}, {0, 3}}; }
inline IntMatrix chain_x2y_y3() { return {{2, 1}, {0, 3}}; }
inline IntMatrix chain_dual() { return {{2, 0}, {1, 3}}; }

}  // namespace eqidx::testing
