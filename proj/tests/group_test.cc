#include <algorithm>
#include <set>

#include "doctest.h"
#include "eqidx/lattice.hpp"
#include "fixtures.hpp"

using namespace eqidx;
using namespace eqidx::testing;

namespace {

// Brute-force oracle: every subset that is closed, as sorted member lists.
std::set<std::vector<ElementId>> all_subgroups_by_subsets(const FiniteGroup& g) {
  std::set<std::vector<ElementId>> out;
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    if (!(mask & 1)) continue;  // identity is element 0
    std::vector<ElementId> m;
    for (ElementId i = 0; i < n; ++i)
      if (mask >> i & 1) m.push_back(i);
    if (g.is_subgroup(m)) out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("build_group orders") {
  CHECK(FiniteGroup::from_permutations(3, {{1, 2, 0}}).order() == 3);
  CHECK(s3().order() == 6);
  CHECK_FALSE(s3().is_abelian());
  // 1-based one-line images are accepted
  CHECK(FiniteGroup::from_permutations(3, {{2, 1, 3}, {2, 3, 1}}).order() == 6);

  auto z6 = FiniteGroup::from_phases(2, {{Rational(-1, 6), Rational(1, 3)}});
  CHECK(z6.order() == 6);
  CHECK(z6.is_abelian());
  CHECK(z6.phases(0) == std::vector<Rational>{0, 0});
  // canonical order is lexicographic in [0,1)^n
  for (ElementId e = 1; e < z6.order(); ++e) CHECK(z6.phases(e - 1) < z6.phases(e));
}

TEST_CASE("build_group errors") {
  CHECK_THROWS_AS(FiniteGroup::from_permutations(3, {{0, 0, 1}}), DomainError);
  CHECK_THROWS_AS(FiniteGroup::from_permutations(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(FiniteGroup::from_phases(1, {{Rational(1, 2001)}}, 2000), DomainError);
  // S_8 has order 40320
  CHECK_THROWS_AS(FiniteGroup::from_permutations(8, {{1, 0, 2, 3, 4, 5, 6, 7},
                                                     {1, 2, 3, 4, 5, 6, 7, 0}}),
                  DomainError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), DomainError);
}

TEST_CASE("table presentation matches permutation presentation") {
  auto g = s3();
  std::vector<std::vector<std::size_t>> t(g.order(), std::vector<std::size_t>(g.order()));
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) t[a][b] = g.multiply(a, b);
  auto h = FiniteGroup::from_table(t);
  CHECK(h.order() == 6);
  CHECK_FALSE(h.is_abelian());
  CHECK(SubgroupLattice::build(h).num_classes() == 4);
}

TEST_CASE("lattice of Z6 and S3") {
  auto lz6 = SubgroupLattice::build(cyclic(6));
  REQUIRE(lz6.size() == 4);
  std::vector<std::size_t> orders;
  for (SubgroupId h = 0; h < lz6.size(); ++h) orders.push_back(lz6.subgroup(h).order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(lz6.num_classes() == 4);

  auto g = s3();
  auto ls3 = SubgroupLattice::build(g);
  CHECK(ls3.size() == 6);
  REQUIRE(ls3.num_classes() == 4);
  CHECK(ls3.class_members(1).size() == 3);  // the three order-2 subgroups
  CHECK(ls3.class_order(2) == 3);
  CHECK(ls3.mu_sub(ls3.trivial(), ls3.whole()) == 3);
  CHECK(ls3.mu_conj(0, 3) == 1);  // 1 - (-1) - (-1) chain sum over e < Z2, Z3 < S3
  // in S3, [e] <= [Z2] <= [S3] and [Z2], [Z3] incomparable
  CHECK(ls3.zeta_conj(0, 1));
  CHECK_FALSE(ls3.zeta_conj(1, 2));
}

TEST_CASE("normalizers") {
  auto g = s3();
  auto lat = SubgroupLattice::build(g);
  CHECK(lat.normalizer(lat.whole()) == lat.whole());
  CHECK(lat.normalizer(lat.trivial()) == lat.whole());
  for (SubgroupId h : lat.class_members(1)) CHECK(lat.normalizer(h) == h);
  CHECK(normalizer(g, lat.subgroup(1).members) == lat.subgroup(1).members);
  CHECK_THROWS_AS(normalizer(g, std::vector<ElementId>{0, 1, 2}), DomainError);
}

TEST_CASE("lattice properties on the test groups") {
  for (const auto& [name, g] : test_groups()) {
    CAPTURE(name);
    auto lat = SubgroupLattice::build(g);

    // complete: agrees with subset enumeration
    auto oracle = all_subgroups_by_subsets(g);
    CHECK(oracle.size() == lat.size());
    for (SubgroupId h = 0; h < lat.size(); ++h) CHECK(oracle.count(lat.subgroup(h).members) == 1);

    for (SubgroupId h = 0; h < lat.size(); ++h) {
      // Moebius-zeta inverse pair on Sub(G)
      for (SubgroupId l : lat.supergroups(h)) {
        std::int64_t s = 0;
        for (SubgroupId k : lat.supergroups(h))
          if (lat.leq(k, l)) s += lat.mu_sub(h, k);
        CHECK(s == (h == l ? 1 : 0));
      }
      // normalizer contains H, H normal in it, class size = |G|/|N|
      SubgroupId n = lat.normalizer(h);
      CHECK(lat.leq(h, n));
      CHECK(lat.class_members(lat.class_of(h)).size() * lat.subgroup(n).order() == g.order());
    }
    // the same identity on ConjSub(G)
    for (ClassId c = 0; c < lat.num_classes(); ++c)
      for (ClassId d = 0; d < lat.num_classes(); ++d) {
        std::int64_t s = 0;
        for (ClassId e = 0; e < lat.num_classes(); ++e)
          if (lat.zeta_conj(e, d)) s += lat.mu_conj(c, e);
        CHECK(s == (c == d ? 1 : 0));
      }
    // representatives are the canonical minimum of their class
    for (ClassId c = 0; c < lat.num_classes(); ++c)
      CHECK(lat.representative(c) ==
            *std::min_element(lat.class_members(c).begin(), lat.class_members(c).end()));
  }
}

TEST_CASE("lattice construction is deterministic") {
  auto a = SubgroupLattice::build(d4());
  auto b = SubgroupLattice::build(d4());
  REQUIRE(a.size() == b.size());
  for (SubgroupId h = 0; h < a.size(); ++h) {
    CHECK(a.subgroup(h).members == b.subgroup(h).members);
    CHECK(a.class_of(h) == b.class_of(h));
  }
  CHECK(a.size() == 10);
  CHECK(a.num_classes() == 8);
}

TEST_CASE("induced subgroup keeps presentation") {
  auto g = FiniteGroup::from_phases(2, {{Rational(1, 2), 0}, {0, Rational(1, 3)}});
  auto lat = SubgroupLattice::build(g);
  auto h = g.induced_subgroup(lat.subgroup(unique_of_order(lat, 3)).members);
  auto direct = FiniteGroup::from_phases(2, {{0, Rational(1, 3)}});
  CHECK(h == direct);
  CHECK(h.fingerprint() == direct.fingerprint());
}
