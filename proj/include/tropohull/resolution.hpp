#pragma once

// Cellular resolutions of monomial ideals from lifted tropical hulls.
//
// The generators x^a of an ideal in n variables become tropical points (0, a)
// in TP^n. A lift of these points plus the orthant rays e_1, ..., e_n spans a
// polyhedron over K whose bounded faces, labeled by the LCM of their vertices,
// carry a chain complex; it resolves the ideal exactly when every subcomplex
// X_{<=b} is acyclic. Only b in the LCM lattice are tested: X_{<=b} equals
// X_{<=b'} where b' is the join of the generators dividing x^b, and it is
// empty when no generator divides x^b.

#include "tropohull/homology.hpp"
#include "tropohull/lifting.hpp"
#include "tropohull/ordered_hull.hpp"
#include "tropohull/puiseux.hpp"
#include "tropohull/tropical.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tropohull {

using Exponent = std::vector<long>;

struct MonomialIdeal {
  std::size_t nvars = 0;
  std::vector<Exponent> generators;

  // Drops duplicates and generators divisible by another. Returns one
  // warning per dropped generator. Throws DomainError on an empty generator
  // list or negative exponents, DimensionError on a length mismatch.
  std::vector<std::string> normalize();
  bool is_minimal() const;
};

bool divides(const Exponent& a, const Exponent& b);  // x^a | x^b
Exponent lcm(const Exponent& a, const Exponent& b);
std::string monomial_string(const Exponent& a);  // "x^4*y", "1"

std::vector<TropicalPoint> tropicalize(const MonomialIdeal& ideal);
// Points are the lifted vectors, rays the unit vectors in coordinates 1..n.
GeneratorSet<PuiseuxNumber> hull_polyhedron(const MonomialIdeal& ideal, const Lift& lift);

struct LabeledCell {
  int dim = 0;
  IndexMask vertices = 0;  // generator indices
  Exponent label;
  std::vector<std::size_t> vertex_order;  // orienting affine basis, lexicographically smallest
  std::vector<std::pair<std::size_t, int>> boundary;  // (facet cell, sign)
};

class LabeledComplex {
 public:
  // Cells ordered by dimension, then by vertex list. Throws InvariantViolation
  // if a label is not monotone along facets or d^2 != 0.
  LabeledComplex(const MonomialIdeal& ideal, const Lift& lift);

  const MonomialIdeal& ideal() const { return ideal_; }
  const std::vector<LabeledCell>& cells() const { return cells_; }
  int dim() const;
  std::vector<std::size_t> ranks() const;  // cells per dimension
  std::vector<std::size_t> cells_of_dim(int k) const;
  // Chain complex of the cells whose label divides x^b.
  ChainComplex chain_complex(const Exponent& b) const;
  ChainComplex chain_complex() const;
  // Every bounded face is simplicial.
  bool simplicial() const;
  // Vertex sets of all cells; equal keys mean isomorphic labeled complexes.
  std::vector<IndexMask> key() const;
  // Bounded faces are exactly those whose supporting functional is positive
  // on every ray; checked for every face of the polyhedron.
  bool bounded_iff_positive_on_rays() const { return bounded_matches_direction_; }
  std::size_t unbounded_face_count() const { return unbounded_faces_; }

 private:
  MonomialIdeal ideal_;
  std::vector<LabeledCell> cells_;
  bool bounded_matches_direction_ = true;
  std::size_t unbounded_faces_ = 0;
};

// A simplicial complex on generator indices.
std::vector<IndexMask> scarf_complex(const MonomialIdeal& ideal);

struct AcyclicityVerdict {
  Exponent b;
  std::size_t cells = 0;
  HomologyReport homology;
  bool acyclic = false;
};

struct ResolutionReport {
  std::vector<std::size_t> ranks;
  std::vector<AcyclicityVerdict> verdicts;
  bool resolution = false;
  bool minimal = false;
  bool contains_scarf = false;
  bool covers_generators = false;  // every generator is a 0-cell
};

// All joins of nonempty generator subsets.
std::vector<Exponent> lcm_lattice(const MonomialIdeal& ideal);
ResolutionReport check_resolution(const LabeledComplex& complex);

// Fewer than n+1 generators count as generic.
bool is_tropically_generic(const MonomialIdeal& ideal);

struct LiftComparison {
  std::string label;
  std::vector<std::size_t> ranks;
  bool resolution = false;
  bool minimal = false;
  bool contains_scarf = false;
  bool simplicial = false;
  std::size_t class_id = 0;  // equal ids for isomorphic labeled complexes
};

// Hull lift first, then generic lifts seeded seed, seed+1, ...
std::vector<LiftComparison> compare_lifts(const MonomialIdeal& ideal, std::size_t generic, std::uint64_t seed);

// Multigraded Betti numbers of I summed over degrees, computed from the
// cells of `complex` with label strictly below each b of the LCM lattice.
std::vector<std::size_t> betti_numbers(const LabeledComplex& complex);

}  // namespace tropohull
