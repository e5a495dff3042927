#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eqidx/burnside.hpp"

namespace eqidx {

using Simplex = std::vector<std::size_t>;  // sorted vertex ids

/// A finite abstract simplicial complex, closed under taking faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Downward closure of the given simplices on vertices 0..num_vertices-1.
  static SimplicialComplex from_simplices(std::size_t num_vertices,
                                          const std::vector<Simplex>& simplices);

  std::size_t num_vertices() const { return num_vertices_; }
  /// All simplices, sorted by dimension then lexicographically.
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  std::optional<std::size_t> find(const Simplex& s) const;
  std::int64_t euler_characteristic() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
};

/**
 * A simplicial complex with a simplicial action of a finite group, given as
 * a vertex permutation for every group element.
 *
 * Fixed-set computations need the action to be regular: an element that maps
 * a simplex to itself must fix it vertex by vertex. barycentric_subdivide()
 * always produces a regular action.
 */
class GSimplicialComplex {
 public:
  /// action[g][v] is the image of vertex v under element g; must be a
  /// homomorphism into the vertex permutations that preserves simplices.
  GSimplicialComplex(RingPtr ring, SimplicialComplex complex,
                     std::vector<std::vector<std::size_t>> action);

  /// The group is the one generated by the given vertex permutations.
  static GSimplicialComplex from_generators(SimplicialComplex complex,
                                            const std::vector<std::vector<std::size_t>>& generators);
  /// X with the trivial action of the group of `ring`.
  static GSimplicialComplex with_trivial_action(RingPtr ring, SimplicialComplex complex);

  const RingPtr& ring() const { return ring_; }
  const SimplicialComplex& complex() const { return complex_; }
  std::size_t vertex_image(ElementId g, std::size_t v) const { return action_[g][v]; }
  std::size_t simplex_image(ElementId g, std::size_t s) const { return simplex_action_[g][s]; }
  const std::vector<std::vector<std::size_t>>& action() const { return action_; }

  bool is_regular() const;
  /// Elements fixing simplex s vertex by vertex.
  std::vector<ElementId> pointwise_stabilizer(std::size_t s) const;

 private:
  RingPtr ring_;
  SimplicialComplex complex_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<std::vector<std::size_t>> simplex_action_;
};

/// One orbit-type piece: points with isotropy in class `cls`, and chi of
/// the piece's quotient (compactly supported, so non-closed pieces work).
struct Stratum {
  ClassId cls;
  std::int64_t chi_quotient;
};

struct StratifiedGData {
  RingPtr ring;
  std::vector<Stratum> strata;
};

/// sum chi(V_i/G) [G/H_i]; with `reduced`, [G/G] is subtracted.
BurnsideElement chi_G_stratified(const StratifiedGData& data, bool reduced = false);

/// Sum over G-orbits of simplices of (-1)^dim [G/Stab]. Throws if the action
/// is not regular.
BurnsideElement chi_G_simplicial(const GSimplicialComplex& x);

/// Simplices fixed vertex by vertex by every element of subgroup h.
SimplicialComplex fixed_subcomplex(const GSimplicialComplex& x, SubgroupId h);

/// Vertices are the simplices of x; simplices are chains under inclusion.
GSimplicialComplex barycentric_subdivide(const GSimplicialComplex& x);

/// Disjoint union of two complexes over the same group.
GSimplicialComplex disjoint_union(const GSimplicialComplex& a, const GSimplicialComplex& b);

/// (1/|G|) sum over pairwise commuting (k+1)-tuples of chi(X^<g_0..g_k>),
/// evaluated on the complex directly.
std::int64_t chi_k_direct(const GSimplicialComplex& x, int k);
inline std::int64_t chi_orbifold_direct(const GSimplicialComplex& x) { return chi_k_direct(x, 1); }

}  // namespace eqidx
