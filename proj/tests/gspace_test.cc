#include "doctest.h"
#include "complexes.hpp"
#include "eqidx/gspace.hpp"
#include "fixtures.hpp"

using namespace eqidx;
using namespace eqidx::testing;

TEST_CASE("chi_G of stratified data") {
  auto z6 = BurnsideRing::create(cyclic(6));
  const auto& lat = z6->lattice();
  CHECK(chi_G_stratified({z6, {{lat.num_classes() - 1, 1}}}) == z6->one());
  CHECK(chi_G_stratified({z6, {}}) == z6->zero());
  CHECK(chi_G_stratified({z6, {}}, true) == -z6->one());

  StratifiedGData d{z6,
                    {{lat.class_of(unique_of_order(lat, 1)), -1},
                     {lat.class_of(unique_of_order(lat, 2)), 1},
                     {lat.class_of(unique_of_order(lat, 3)), 1}}};
  CHECK(chi_G_stratified(d) ==
        orbit_of_order(z6, 2) + orbit_of_order(z6, 3) - orbit_of_order(z6, 1));
  CHECK_THROWS_AS(chi_G_stratified({z6, {{17, 1}}}), DomainError);
}

TEST_CASE("chi_G of small complexes") {
  auto tri = GSimplicialComplex::from_generators(polygon(3), {{1, 2, 0}});
  CHECK(chi_G_simplicial(tri).is_zero());

  auto square = GSimplicialComplex::from_generators(polygon(4), {{0, 3, 2, 1}});
  const auto& ring = square.ring();
  CHECK(chi_G_simplicial(square) == 2 * ring->one() - ring->basis(0));

  auto fixed = fixed_subcomplex(square, ring->lattice().whole());
  CHECK(fixed.num_vertices() == 2);
  CHECK(fixed.size() == 2);
  CHECK(fixed.euler_characteristic() == 2);
  CHECK(fixed_subcomplex(square, ring->lattice().trivial()).size() == square.complex().size());
  CHECK(fixed_subcomplex(tri, tri.ring()->lattice().whole()).size() == 0);

  // r_0 and r_1 of 2[G/G] - [G/e] over Z2: 2 - 1 and 2*2 - 1
  CHECK(chi_k_direct(square, 0) == 1);
  CHECK(chi_orbifold_direct(square) == 3);

  auto z5 = BurnsideRing::create(cyclic(5));
  auto trivial = GSimplicialComplex::with_trivial_action(z5, octahedron());
  CHECK(chi_G_simplicial(trivial) == 2 * z5->one());
  // trivial action of Z5: every tuple fixes all of X, so chi^(k) = 5^k chi(X)
  CHECK(chi_k_direct(trivial, 0) == 2);
  CHECK(chi_k_direct(trivial, 1) == 10);
  CHECK(chi_k_direct(trivial, 2) == 50);

  auto trivial_group = GSimplicialComplex::from_generators(octahedron(), {});
  CHECK(trivial_group.ring()->group().order() == 1);
  for (int k = 0; k <= 2; ++k) CHECK(chi_k_direct(trivial_group, k) == 2);
}

TEST_CASE("subdivision") {
  auto point = GSimplicialComplex::from_generators(SimplicialComplex::from_simplices(1, {{0}}), {});
  auto p2 = barycentric_subdivide(point);
  CHECK(p2.complex().size() == 1);

  // one edge with its endpoints swapped
  auto edge = GSimplicialComplex::from_generators(SimplicialComplex::from_simplices(2, {{0, 1}}),
                                                  {{1, 0}});
  CHECK_FALSE(edge.is_regular());
  CHECK_THROWS_AS(chi_G_simplicial(edge), DomainError);
  CHECK_THROWS_AS(fixed_subcomplex(edge, 1), DomainError);
  auto sub = barycentric_subdivide(edge);
  CHECK(sub.is_regular());
  CHECK(sub.complex().num_vertices() == 3);
  CHECK(sub.complex().size() == 5);  // 3 vertices, 2 edges
  const auto& ring = sub.ring();
  CHECK(chi_G_simplicial(sub) == ring->one());  // fixed midpoint, one free vertex orbit, one free edge orbit
  auto mid = fixed_subcomplex(sub, ring->lattice().whole());
  CHECK(mid.size() == 1);

  // simplices of the subdivision = chains of faces
  auto tri = SimplicialComplex::from_simplices(3, {{0, 1, 2}});
  auto tsub = barycentric_subdivide(GSimplicialComplex::from_generators(tri, {}));
  CHECK(tsub.complex().size() == 7 + 12 + 6);
}

TEST_CASE("mark identity, r_k consistency and invariance on the simplicial suite") {
  for (const auto& [name, x] : simplicial_suite()) {
    CAPTURE(name);
    const auto& ring = x.ring();
    auto chi = chi_G_simplicial(x);
    CHECK(cardinality(chi) == x.complex().euler_characteristic());
    for (ClassId c = 0; c < ring->rank(); ++c) {
      for (SubgroupId h : ring->lattice().class_members(c))
        CHECK(mark(chi, c) == fixed_subcomplex(x, h).euler_characteristic());
    }
    for (int k = 0; k <= 2; ++k) CHECK(r_k(chi, k) == chi_k_direct(x, k));
    CHECK(chi_G_simplicial(barycentric_subdivide(x)) == chi);
    CHECK(chi_G_simplicial(disjoint_union(x, x)) == chi + chi);
  }
}

TEST_CASE("disjoint union of different complexes") {
  auto ring = BurnsideRing::create(cyclic(2));
  auto a = GSimplicialComplex(ring, polygon(4), {{0, 1, 2, 3}, {0, 3, 2, 1}});
  auto b = GSimplicialComplex::with_trivial_action(ring, octahedron());
  CHECK(chi_G_simplicial(disjoint_union(a, b)) == chi_G_simplicial(a) + chi_G_simplicial(b));
}

TEST_CASE("invalid actions are rejected") {
  auto ring = BurnsideRing::create(cyclic(2));
  // maps edge {0,1} to {0,2}, which is not a simplex of the path 0-1, 1-2
  auto path = SimplicialComplex::from_simplices(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(GSimplicialComplex(ring, path, {{0, 1, 2}, {1, 0, 2}}), DomainError);
  // not a homomorphism from Z2
  CHECK_THROWS_AS(GSimplicialComplex(ring, polygon(3), {{0, 1, 2}, {1, 2, 0}}), DomainError);
}
