#pragma once

// Lifts of tropical point configurations to K^d and the degree map back.
//
// A lift sends v_i to a vector with coordinatewise degrees v_i and positive
// leading coefficients. Hulls of lifts are cones; a face of the cone maps
// under the degree map onto tconv of the degrees of its generators, which is
// recorded as a set of cells of the covector decomposition of V.

#include "tropohull/covector.hpp"
#include "tropohull/ordered_hull.hpp"
#include "tropohull/puiseux.hpp"
#include "tropohull/tropical.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tropohull {

using KVector = std::vector<PuiseuxNumber>;

enum class LiftKind { hull, generic, explicit_ };

struct Lift {
  std::vector<TropicalPoint> source;
  std::vector<KVector> vectors;
  LiftKind kind = LiftKind::hull;
  std::uint64_t seed = 0;  // meaningful for generic lifts
  std::string label;
};

// Throws InvariantViolation unless degrees reproduce source and every leading
// coefficient is positive.
void validate(const Lift& lift);

Lift hull_lift(const std::vector<TropicalPoint>& points);
// v_ij -> t^{v_ij} + c t^{v_ij - e} with c in (0,1), e in (0,1/2), resampled
// until every rank-sized subset of lifted vectors has nonzero determinant.
Lift generic_lift(const std::vector<TropicalPoint>& points, std::uint64_t seed, std::size_t budget = 64);
Lift explicit_lift(const std::vector<TropicalPoint>& points, std::vector<KVector> vectors, std::string label);

TropicalPoint degree_point(const KVector& x);

// Image of the halfspace f . x >= 0: apex_i = -deg f_i (+inf when f_i = 0),
// sectors {i : f_i > 0}.
TropicalHalfspace halfspace_image(const KVector& f);

// Sign vector of a functional.
std::vector<int> sign_vector(const KVector& f);

struct LiftFace {
  IndexMask generators = 0;
  int dim = -1;                      // dimension of the lift face
  std::vector<std::size_t> cells;    // bounded cells of tconv(deg of generators)
  int image_dim = -1;
  std::optional<KVector> normal;     // for facets
};

// Faces of one lift together with their degree images.
class LiftAnalysis {
 public:
  LiftAnalysis(Lift lift, const CellComplex& complex);

  const Lift& lift() const { return lift_; }
  const ConeHull<PuiseuxNumber>& hull() const { return hull_; }
  const std::vector<LiftFace>& faces() const { return faces_; }
  int dim() const { return static_cast<int>(hull_.rank()) - 1; }

  std::vector<std::size_t> faces_of_dim(int k) const;
  // k-faces whose image is k-dimensional.
  std::vector<std::size_t> fatoms(int k) const;
  std::vector<std::size_t> facets() const { return faces_of_dim(dim() - 1); }
  // Union of the facet images.
  std::vector<std::size_t> boundary_image() const;
  // Facets of the lift whose image lies in the given cell set.
  std::vector<std::size_t> facets_inside(const std::vector<std::size_t>& cells) const;

  bool simplicial() const;

 private:
  Lift lift_;
  ConeHull<PuiseuxNumber> hull_;
  std::vector<LiftFace> faces_;
};

// Bounded cells of `complex` lying in tconv of the listed points.
std::vector<std::size_t> image_cells(const CellComplex& complex, const std::vector<TropicalPoint>& points);

// x lies strictly inside every facet halfspace image of the lift. Throws
// DomainError when the lift is not full-dimensional.
bool interior_by_halfspaces(const LiftAnalysis& analysis, const TropicalPoint& x);

std::string to_string(LiftKind kind);

}  // namespace tropohull
