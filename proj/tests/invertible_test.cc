#include "doctest.h"
#include "eqidx/invertible.hpp"
#include "fixtures.hpp"
#include "jacobian_oracle.hpp"
#include "poly_fixtures.hpp"

using namespace eqidx;
using namespace eqidx::testing;

namespace {

Rational q(std::int64_t a, std::int64_t b) { return Rational(a, b); }

ElementId element_with_phases(const FiniteGroup& g, const std::vector<Rational>& a) {
  for (ElementId e = 0; e < g.order(); ++e) {
    auto p = g.phases(e);
    bool same = true;
    for (std::size_t j = 0; j < a.size(); ++j) same = same && p[j] == mod_one(a[j]);
    if (same) return e;
  }
  return static_cast<ElementId>(g.order());
}

}  // namespace

TEST_CASE("validation and block decomposition") {
  auto f = validate(sum_x2_y3());
  CHECK(f.atoms().size() == 2);
  CHECK(f.atoms()[0].kind == Atom::Kind::Fermat);
  CHECK(f.weights() == std::vector<Rational>{q(1, 2), q(1, 3)});
  CHECK(f.to_string() == "x^2 + y^3");

  auto c = validate(chain_x2y_y3());
  REQUIRE(c.atoms().size() == 1);
  CHECK(c.atoms()[0].kind == Atom::Kind::Chain);
  CHECK(c.atoms()[0].vars == std::vector<std::size_t>{0, 1});
  CHECK(c.atoms()[0].exponents == std::vector<std::int64_t>{2, 3});
  CHECK(c.weights() == std::vector<Rational>{q(1, 3), q(1, 3)});
  CHECK(c.det() == 6);
  CHECK(c.to_string() == "x^2*y + y^3");

  auto z = validate({{1}});
  CHECK(z.weights() == std::vector<Rational>{1});

  auto loop = validate(assemble({{Atom::Kind::Loop, {2, 3, 4}}}));
  REQUIRE(loop.atoms().size() == 1);
  CHECK(loop.atoms()[0].kind == Atom::Kind::Loop);
  CHECK(loop.det() == 25);

  // rows in a different order than the variables
  auto perm = validate({{0, 3}, {2, 1}});
  CHECK(perm.atoms().size() == 1);
  CHECK(perm.atoms()[0].kind == Atom::Kind::Chain);

  CHECK(validate({}).num_variables() == 0);
  CHECK_THROWS_AS(validate({{1, 1}, {1, 1}}), DomainError);          // singular
  CHECK_THROWS_AS(validate({{2, 2}, {0, 3}}), DomainError);          // x^2y^2
  CHECK_THROWS_AS(validate({{2, 0, 1}, {0, 2, 1}, {0, 0, 3}}), DomainError);  // two chains into z
  CHECK_THROWS_AS(validate({{2, 1, 1}, {0, 3, 0}, {0, 0, 3}}), DomainError);  // three variables
  CHECK_THROWS_AS(validate({{2, 0}}), DomainError);
  CHECK_THROWS_AS(validate({{-2}}), DomainError);
  CHECK_THROWS_AS(validate({{0, 1}, {0, 2}}), DomainError);
}

TEST_CASE("Milnor numbers") {
  CHECK(milnor_number(validate(sum_x2_y3())) == 2);
  CHECK(milnor_number(validate(chain_x2y_y3())) == 4);
  CHECK(milnor_number(validate(chain_dual())) == 5);
  CHECK(milnor_number(validate({})) == 1);
  CHECK(milnor_number(validate({{1}})) == 0);
}

TEST_CASE("Milnor-Orlik agrees with the Jacobian quotient") {
  CHECK(jacobian_dimension(chain_x2y_y3()) == 4);
  CHECK(jacobian_dimension(chain_dual()) == 5);
  for (const auto& [name, e] : milnor_suite()) {
    CAPTURE(name);
    auto f = validate(e);
    CHECK(milnor_number(f) == jacobian_dimension(e));
    CHECK(cramer_weights(e) == f.weights());
  }
}

TEST_CASE("symmetry groups") {
  auto g = symmetry_group(validate(sum_x2_y3()));
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  CHECK(element_with_phases(g, {q(1, 2), 0}) < 6);
  CHECK(element_with_phases(g, {0, q(1, 3)}) < 6);

  auto c = symmetry_group(validate(chain_x2y_y3()));
  CHECK(c.order() == 6);
  const auto gen = element_with_phases(c, {q(-1, 6), q(1, 3)});
  REQUIRE(gen < 6);
  CHECK(c.closure(std::vector<ElementId>{gen}).size() == 6);

  auto d = symmetry_group(validate(chain_dual()));
  const auto dgen = element_with_phases(d, {q(1, 2), q(-1, 6)});
  REQUIRE(dgen < 6);
  CHECK(d.closure(std::vector<ElementId>{dgen}).size() == 6);

  CHECK_THROWS_AS(symmetry_group(validate({{7}}), 5), DomainError);
  CHECK(symmetry_group(validate({})).order() == 1);

  for (const auto& [name, e] : polynomial_suite(3, 60)) {
    CAPTURE(name);
    auto f = validate(e);
    auto grp = symmetry_group(f);
    CHECK(static_cast<std::int64_t>(grp.order()) == (f.det() < 0 ? -f.det() : f.det()));
    for (ElementId x = 0; x < grp.order(); ++x) CHECK(is_symmetry(f, grp.phases(x)));
  }
}

TEST_CASE("transpose") {
  auto f = validate(sum_x2_y3());
  CHECK(transpose(f).exponents() == f.exponents());
  auto c = validate(chain_x2y_y3());
  CHECK(transpose(c).exponents() == chain_dual());
  CHECK(transpose(transpose(c)).exponents() == c.exponents());
  CHECK(transpose(c).to_string() == "x^2 + x*y^3");
}

TEST_CASE("pairing") {
  auto c = validate(chain_x2y_y3());
  CHECK(pairing(c, {0, 0}, {q(1, 2), q(-1, 6)}) == 0);
  CHECK(pairing(c, {q(-1, 6), q(1, 3)}, {0, 0}) == 0);
  // (E a) = (0, 1) for a = (-1/6, 1/3), so the value is b_2 mod 1
  CHECK(pairing(c, {q(-1, 6), q(1, 3)}, {q(1, 2), q(-1, 6)}) == q(5, 6));
  CHECK_THROWS_AS(pairing(c, {q(1, 5), 0}, {0, 0}), DomainError);
  CHECK_THROWS_AS(pairing(c, {0, 0}, {q(1, 5), 0}), DomainError);

  for (const auto& [name, e] : polynomial_suite(2, 30)) {
    CAPTURE(name);
    DualityPair pair(validate(e));
    const auto& g = pair.ring()->group();
    const auto& gt = pair.dual_ring()->group();
    const std::int64_t det = pair.f().det() < 0 ? -pair.f().det() : pair.f().det();
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < gt.order(); ++b) {
        const auto v = pair.pairing(a, b);
        CHECK(v == pairing(pair.f(), g.phases(a), gt.phases(b)));
        CHECK(det % denominator_i64(v) == 0);
        // bilinear in the first argument
        const auto a2 = g.multiply(a, a);
        CHECK(pair.pairing(a2, b) == mod_one(2 * v));
      }
    // non-degenerate on the G_f side as well
    for (ElementId a = 1; a < g.order(); ++a) {
      bool nonzero = false;
      for (ElementId b = 0; b < gt.order(); ++b) nonzero = nonzero || pair.pairing(a, b) != 0;
      CHECK(nonzero);
    }
  }
}

TEST_CASE("dual subgroups") {
  DualityPair pair(validate(chain_x2y_y3()));
  const auto& lat = pair.ring()->lattice();
  const auto& dlat = pair.dual_ring()->lattice();
  CHECK(pair.dual_subgroup(lat.trivial()) == dlat.whole());
  CHECK(pair.dual_subgroup(lat.whole()) == dlat.trivial());
  CHECK(dlat.subgroup(pair.dual_subgroup(unique_of_order(lat, 2))).order() == 3);

  for (const auto& [name, e] : polynomial_suite(3, 60)) {
    CAPTURE(name);
    DualityPair p(validate(e));
    const auto& l = p.ring()->lattice();
    for (SubgroupId h = 0; h < l.size(); ++h) {
      const auto ht = p.dual_subgroup(h);
      CHECK(l.subgroup(h).order() * p.dual_ring()->lattice().subgroup(ht).order() ==
            p.ring()->group().order());
      CHECK(p.dual_subgroup_of_dual(ht) == h);
    }
  }
  CHECK_THROWS_AS(DualityPair(validate({{2, 0}, {0, 600}})), DomainError);
}

TEST_CASE("fixed loci and restriction") {
  auto c = validate(chain_x2y_y3());
  auto g = symmetry_group(c);
  const auto h2 = g.closure(std::vector<ElementId>{element_with_phases(g, {q(1, 2), 0})});
  CHECK(h2.size() == 2);
  CHECK(fixed_locus(g, h2) == std::vector<std::size_t>{1});
  const auto h3 = g.closure(std::vector<ElementId>{element_with_phases(g, {q(-1, 3), q(2, 3)})});
  CHECK(h3.size() == 3);
  CHECK(fixed_locus(g, h3).empty());
  CHECK(fixed_locus(g, std::vector<ElementId>{0}) == std::vector<std::size_t>{0, 1});

  CHECK(restrict_to(c, {0, 1}).exponents() == c.exponents());
  CHECK(restrict_to(c, {1}).exponents() == IntMatrix{{3}});
  CHECK(restrict_to(validate(sum_x2_y3()), {0}).exponents() == IntMatrix{{2}});
  CHECK(restrict_to(c, {}).num_variables() == 0);
  CHECK_THROWS_AS(restrict_to(c, {0}), DomainError);

  CHECK(chi_milnor_fixed(c, g, h2) == 3);
  CHECK(chi_milnor_fixed(c, g, h3) == 0);
  CHECK(chi_milnor_fixed(c, g, std::vector<ElementId>{0}) == -3);
  std::vector<ElementId> all(g.order());
  for (ElementId x = 0; x < g.order(); ++x) all[x] = x;
  CHECK(fixed_locus(g, all).empty());
  CHECK(chi_milnor_fixed(c, g, all) == 0);
}

TEST_CASE("equivariant Milnor fibre and index of df: worked examples") {
  {
    auto f = validate(sum_x2_y3());
    auto ring = BurnsideRing::create(symmetry_group(f));
    auto e = orbit_of_order(ring, 1), z2 = orbit_of_order(ring, 2), z3 = orbit_of_order(ring, 3);
    CHECK(chi_G_milnor(f, ring) == z2 + z3 - e);
    auto ind = index_df(f, ring);
    CHECK(ind == ring->one() + e - z2 - z3);
    CHECK(cardinality(ind) == 2);
  }
  {
    auto f = validate(chain_x2y_y3());
    auto ring = BurnsideRing::create(symmetry_group(f));
    auto e = orbit_of_order(ring, 1), z2 = orbit_of_order(ring, 2);
    CHECK(chi_G_milnor(f, ring) == z2 - e);
    auto ind = index_df(f, ring);
    CHECK(ind == ring->one() + e - z2);
    CHECK(cardinality(ind) == 4);
    auto data = milnor_data(f, ring);
    CHECK(data.per_subgroup[0].chi == -3);
    CHECK(data.per_subgroup[0].mu == 4);
  }
  {
    auto f = validate(chain_dual());
    auto ring = BurnsideRing::create(symmetry_group(f));
    auto e = orbit_of_order(ring, 1), z3 = orbit_of_order(ring, 3);
    CHECK(chi_G_milnor(f, ring) == z3 - e);
    auto ind = index_df(f, ring);
    CHECK(ind == ring->one() + e - z3);
    CHECK(cardinality(ind) == 5);
  }
  {
    // one variable: x^a has a points permuted freely by Z_a
    for (std::int64_t a = 2; a <= 9; ++a) {
      auto f = validate({{a}});
      auto ring = BurnsideRing::create(symmetry_group(f));
      CHECK(chi_G_milnor(f, ring) == ring->basis(0));
    }
  }
  {
    // trivial group: (1 - chi(M_f)) [G/G] = (-1)^n mu [G/G]
    auto f = validate(chain_x2y_y3());
    auto triv = BurnsideRing::create(FiniteGroup::from_phases(2, {}));
    CHECK(index_df(f, triv) == 4 * triv->one());
    auto g = validate(assemble({{Atom::Kind::Fermat, {2}}, {Atom::Kind::Fermat, {3}}, {Atom::Kind::Fermat, {2}}}));
    auto triv3 = BurnsideRing::create(FiniteGroup::from_phases(3, {}));
    CHECK(index_df(g, triv3) == -2 * triv3->one());
  }
  auto wrong = BurnsideRing::create(FiniteGroup::from_phases(2, {{q(1, 5), 0}}));
  CHECK_THROWS_AS(index_df(validate(chain_x2y_y3()), wrong), DomainError);
  CHECK_THROWS_AS(index_df(validate(chain_x2y_y3()), BurnsideRing::create(cyclic(2))), DomainError);
}

TEST_CASE("mark identity, cardinality and restriction compatibility") {
  for (const auto& [name, e] : polynomial_suite(3, 36)) {
    CAPTURE(name);
    auto f = validate(e);
    auto ring = BurnsideRing::create(symmetry_group(f));
    const auto& lat = ring->lattice();
    auto chi = chi_G_milnor(f, ring);
    auto ind = index_df(f, ring);
    const std::int64_t sign = f.num_variables() % 2 == 0 ? 1 : -1;
    CHECK(cardinality(ind) == sign * milnor_number(f));
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      CHECK(mark(chi, lat.class_of(h)) == chi_milnor_fixed(f, ring->group(), lat.subgroup(h).members));
      auto sub = ring->subgroup_ring(h);
      CHECK(restrict(ind, sub) == index_df(f, sub));
    }
  }
}

TEST_CASE("duality checks") {
  auto rep = duality_check(validate(chain_x2y_y3()));
  CHECK(rep.r0 == 1);
  CHECK(rep.r0_dual == 1);
  DualityPair pair(validate(chain_x2y_y3()));
  const auto& lat = pair.ring()->lattice();
  for (const auto& row : rep.pairs) {
    if (row.h == lat.whole()) {
      CHECK(row.r1 == 5);
      CHECK(row.r1_dual == 5);
    }
    if (row.h == lat.trivial()) {
      CHECK(row.r1 == 4);
      CHECK(row.r1_dual == 4);
    }
  }
  CHECK(rep.r1_equal());
  CHECK(rep.r1_equal_signed());

  // one variable: the orbifold indices agree up to the sign (-1)^n
  auto odd = duality_check(validate({{2}}));
  CHECK(odd.r0_equal());
  CHECK_FALSE(odd.r1_equal());
  CHECK(odd.r1_equal_signed());

  for (const auto& [name, e] : polynomial_suite(3, 24)) {
    CAPTURE(name);
    auto r = duality_check(validate(e));
    CHECK(r.r1_equal_signed());
    if (r.num_variables % 2 == 0) CHECK(r.r1_equal());
  }
}
