#pragma once

// The decomposition of TP^{d-1} by the types of a finite point set.
//
// For a point x, the type (covector) records S_i = argmax_j (v_ij - x_j) for
// each input point v_i. The sets {x : type(x) = T} are relatively open
// polyhedra partitioning TP^{d-1}; the bounded ones (those whose sets cover
// every coordinate) tile tconv(V).

#include "tropohull/tropical.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropohull {

class Covector {
 public:
  Covector() = default;
  explicit Covector(std::vector<SectorSet> sets) : sets_(std::move(sets)) {}

  std::size_t size() const { return sets_.size(); }
  SectorSet operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<SectorSet>& sets() const { return sets_; }
  SectorSet coverage() const;

  // Componentwise containment; a cell lies in the closure of another exactly
  // when its covector contains the other's.
  bool contains(const Covector& other) const;
  Covector join(const Covector& other) const;

  friend bool operator==(const Covector&, const Covector&) = default;
  friend auto operator<=>(const Covector&, const Covector&) = default;

  // e.g. "(12,3,134)".
  std::string to_string() const;

 private:
  std::vector<SectorSet> sets_;
};

Covector covector_of(const TropicalPoint& x, std::span<const TropicalPoint> points);

struct Cell {
  Covector type;
  int dim = 0;
  TropicalPoint witness;  // a point of the open cell
  bool bounded = false;
};

class CellComplex {
 public:
  static CellComplex decompose(std::vector<TropicalPoint> points);

  const std::vector<TropicalPoint>& points() const { return points_; }
  std::size_t dim() const { return points_.empty() ? 0 : points_[0].dim(); }
  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::size_t id) const { return cells_[id]; }
  const std::vector<Cell>& cells() const { return cells_; }

  // Cell containing x.
  std::size_t locate(const TropicalPoint& x) const;
  std::optional<std::size_t> find(const Covector& type) const;

  // a lies in the closure of b.
  bool is_face(std::size_t a, std::size_t b) const;
  // Cells in the closure of b (b included).
  std::vector<std::size_t> closure(std::size_t b) const;
  // Cells whose closure contains a (a included).
  std::vector<std::size_t> star(std::size_t a) const;
  // Some cell lies in both closures.
  bool closures_meet(std::size_t a, std::size_t b) const;

  std::vector<std::size_t> bounded_cells() const;
  std::vector<std::size_t> cells_of_dim(int k, bool bounded_only = true) const;
  // Bounded cells with a neighbourhood inside tconv(V).
  std::vector<std::size_t> interior_cells() const;
  std::vector<std::size_t> boundary_cells() const;
  bool is_interior(std::size_t id) const;

  std::vector<TropicalPoint> pseudovertices() const;

 private:
  std::vector<TropicalPoint> points_;
  std::vector<Cell> cells_;
  std::map<Covector, std::size_t> index_;
};

// Dimension of a cell from its defining difference constraints: the number of
// coordinate classes forced equal up to constants, minus one. Independent of
// the covector-graph formula used by decompose.
int cell_dimension_by_constraints(const Covector& type, std::span<const TropicalPoint> points);

}  // namespace tropohull
