#pragma once

// Faces of tropical polytopes: J-facets and their intersection lattice, the
// lift-based k-faces, face intersections, directions and edge sign vectors.
//
// A k-face is a set of boundary k-cells of the covector decomposition that,
// for every sampled lift, is a union of images of k-faces of that lift whose
// image is k-dimensional, and is inclusion-minimal with this property.

#include "tropohull/covector.hpp"
#include "tropohull/homology.hpp"
#include "tropohull/lifting.hpp"
#include "tropohull/tropical.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropohull {

// ---------------------------------------------------------------- J-facets

struct JFacet {
  IndexMask vertices = 0;                  // indices into the point list
  std::vector<TropicalHalfspace> witnesses;  // every pseudovertex halfspace cutting out this set
  const TropicalHalfspace& witness() const { return witnesses.front(); }
};

// Sorted by vertex mask.
std::vector<JFacet> j_facets(const std::vector<TropicalPoint>& points);

struct JFaceLattice {
  std::vector<IndexMask> elements;  // bottom (empty) first, top (all vertices) last
  std::vector<std::vector<std::size_t>> covers;  // covers[a] = elements covering a
  std::vector<int> shortest, longest;            // chain lengths from the bottom
  bool graded() const { return shortest == longest; }
  int height() const { return longest.back(); }
  std::optional<std::size_t> find(IndexMask m) const;
  // Number of proper elements with each rank (an f-vector); empty when not graded.
  std::vector<std::size_t> rank_sizes() const;
};

JFaceLattice j_face_lattice(const std::vector<TropicalPoint>& points, const std::vector<JFacet>& facets);

// A lift in which the J-facet's vertex set spans a facet: starting from the
// hull lift, vertices are moved by lower-order terms onto the hyperplane of an
// independent subset. nullopt when no subset yields a facet.
std::optional<Lift> j_facet_lift(const std::vector<TropicalPoint>& points, const JFacet& facet);

// ---------------------------------------------------------------- new faces

struct Face {
  int k = 0;
  std::vector<std::size_t> cells;  // sorted ids of boundary k-cells
  IndexMask vertices = 0;          // vertices used by the lifted face in every lift
  friend bool operator==(const Face& a, const Face& b) { return a.k == b.k && a.cells == b.cells; }
};

struct Direction {
  SectorSet positive, negative;  // R and S
  struct PerLift {
    std::size_t lift = 0;
    SectorSet positive, negative;
  };
  std::vector<PerLift> per_lift;  // lifts where the set is cut out by facets
  std::vector<std::size_t> missing;  // lifts where it is not
  bool complete() const { return missing.empty(); }
};

struct FaceSearchOptions {
  std::size_t max_branch_depth = 16;  // branch points along one search path
};

// Sampled lifts of one configuration together with its covector decomposition.
class FaceSystem {
 public:
  FaceSystem(std::vector<TropicalPoint> points, std::vector<Lift> lifts);

  const CellComplex& complex() const { return complex_; }
  const std::vector<TropicalPoint>& points() const { return complex_.points(); }
  const std::vector<LiftAnalysis>& lifts() const { return lifts_; }
  const std::vector<std::size_t>& boundary() const { return boundary_; }
  std::vector<std::size_t> boundary_cells(int k) const;
  int dim() const { return dim_; }

  // Images of the k-faces of lift l whose image is k-dimensional: the k-cells
  // of each image, restricted to those images lying in the boundary.
  std::vector<std::vector<std::size_t>> fatom_images(std::size_t l, int k) const;
  // Indices into lifts()[l].faces() of the fatoms listed by fatom_images.
  std::vector<std::size_t> fatom_faces(std::size_t l, int k) const;

  // Throws BudgetExceeded past the branch depth.
  std::vector<Face> faces(int k, const FaceSearchOptions& options = {}) const;
  // faces(k) for k = 0 .. dim-1.
  std::vector<std::vector<Face>> all_faces(const FaceSearchOptions& options = {}) const;

  // Union of the closures of the face's cells.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& cells) const;
  bool contains(const std::vector<std::size_t>& closed_cells, const TropicalPoint& x) const;

  // Degree image of the lifted faces of F in lift l (all cells). Unlike the
  // closure of F's k-cells it keeps lower-dimensional parts of the images.
  std::vector<std::size_t> image(const Face& f, std::size_t lift) const;
  // Degree image of the intersection of the lifted faces in lift l (all cells).
  std::vector<std::size_t> intersection(const Face& f, const Face& g, std::size_t lift) const;
  // k-fatoms of lift l whose image lies inside F.
  std::vector<std::size_t> fatoms_inside(const Face& f, std::size_t lift) const;
  // For each face of faces(k), the k-fatoms of lift l assigned to it, such that
  // every fatom goes to one face containing it and each face is the union of
  // its share. nullopt when no such split exists.
  std::optional<std::vector<std::vector<std::size_t>>> partition(int k, std::size_t lift) const;
  // F's share of partition(f.k, lift), or fatoms_inside when there is no split.
  std::vector<std::size_t> lifted_faces(const Face& f, std::size_t lift) const;

  // Defining functionals of the lift facets whose images make up F.
  Direction direction(const Face& f) const;
  // Same, for lift facets with exactly the given generator set.
  Direction direction(IndexMask generators) const;

  // Cells met by the tropical segment between p and q.
  std::vector<std::size_t> segment_cells(const TropicalPoint& p, const TropicalPoint& q) const;

  // The two k-cells share a cell of their closures.
  bool adjacent(std::size_t a, std::size_t b) const { return complex_.closures_meet(a, b); }
  bool connected(const Face& f) const;

  // Poset of J-facets and the faces of each J-facet in a lift realizing it.
  Poset j_derived_poset(const std::vector<JFacet>& facets, std::vector<IndexMask>* labels = nullptr) const;
  // Poset of all new faces; G < F when in every lift each lifted face of G is
  // a face of a lifted face of F.
  Poset face_poset(const std::vector<std::vector<Face>>& faces) const;

 private:
  CellComplex complex_;
  std::vector<LiftAnalysis> lifts_;
  std::vector<std::size_t> boundary_;
  int dim_ = 0;
  mutable std::map<int, std::vector<Face>> face_cache_;
  mutable std::map<std::pair<int, std::size_t>, std::optional<std::vector<std::vector<std::size_t>>>> partition_cache_;
};

// The default sample: hull lift, `generic` generic lifts seeded seed, seed+1,
// ..., and (optionally) a realizing lift for every J-facet.
std::vector<Lift> sample_lifts(const std::vector<TropicalPoint>& points, std::size_t generic, std::uint64_t seed,
                               bool with_j_facet_lifts = true);

// Sign vectors of positive combinations of the two facet functionals of lift
// containing the face with the given generators. Throws DomainError unless
// exactly two facets contain it.
std::vector<std::vector<int>> edge_sign_vectors(const LiftAnalysis& lift, IndexMask face_generators);
std::vector<std::vector<int>> combination_sign_vectors(const KVector& f, const KVector& g);

// "(+-0-)".
std::string sign_string(const std::vector<int>& s);
// Point labels A, B, ... concatenated for the set bits.
std::string vertex_label(IndexMask m);

}  // namespace tropohull
