#pragma once

// Convex hulls over an ordered field. Everything here is a template over the
// field type F, which must provide +, -, *, /, ==, construction from long,
// sign_of(F) and make_primitive(std::vector<F>&). It is instantiated with
// Rational and PuiseuxNumber.
//
// The core object is a ConeHull: the polyhedral cone spanned by a list of
// vectors. Affine configurations (points and rays) are homogenized into a cone
// by GeneratorSet. Facets are computed by double description on the dual
// cone; adjacency is decided from incidences only.

#include "tropohull/errors.hpp"
#include "tropohull/puiseux.hpp"
#include "tropohull/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropohull {

// Subsets of generator indices; a hull holds at most 64 generators.
using IndexMask = std::uint64_t;

inline std::vector<std::size_t> mask_indices(IndexMask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline IndexMask mask_of(const std::vector<std::size_t>& indices) {
  IndexMask m = 0;
  for (auto i : indices) m |= IndexMask{1} << i;
  return m;
}

inline bool mask_includes(IndexMask big, IndexMask small) { return (small & ~big) == 0; }

namespace linalg {

template <class F>
using Vector = std::vector<F>;
template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
F dot(const Vector<F>& a, const Vector<F>& b) {
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == 0) && !(b[i] == 0)) s += a[i] * b[i];
  return s;
}

template <class F>
struct Echelon {
  Matrix<F> rows;                  // reduced row echelon form, rank rows
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination of the rows of m.
template <class F>
Echelon<F> echelon(Matrix<F> m) {
  Echelon<F> e;
  if (m.empty()) return e;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const F inv = F(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k)
      if (!(m[r][k] == 0)) m[r][k] = m[r][k] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const F f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!(m[r][k] == 0)) m[i][k] = m[i][k] - f * m[r][k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

// Fraction-free (Bareiss) forward elimination. Returns the pivot columns and
// leaves m in echelon form; every division is exact.
template <class F>
std::vector<std::size_t> bareiss(Matrix<F>& m, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  F prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (swaps) ++*swaps;
    }
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        F x = m[r][c] * m[i][k] - m[i][c] * m[r][k];
        m[i][k] = x == 0 ? F(0) : exact_quotient(x, prev);
      }
      m[i][c] = F(0);
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return bareiss(m).size();
}

template <class F>
std::vector<std::size_t> pivot_columns(Matrix<F> m) {
  return bareiss(m);
}

template <class F>
F determinant(Matrix<F> m);

// Signed maximal minors of a k x (k+1) matrix: the vector w with
// w_j = (-1)^j det(m without column j), orthogonal to every row of m.
template <class F>
Vector<F> cross_minors(const Matrix<F>& m) {
  const std::size_t k = m.size();
  Vector<F> w(k + 1, F(0));
  for (std::size_t j = 0; j <= k; ++j) {
    Matrix<F> minor;
    for (const auto& row : m) {
      Vector<F> r;
      for (std::size_t c = 0; c <= k; ++c)
        if (c != j) r.push_back(row[c]);
      minor.push_back(std::move(r));
    }
    F d = determinant(std::move(minor));
    w[j] = j % 2 ? F(-d) : d;
  }
  return w;
}

// Basis of {x : m x = 0}, computed fraction-free: one generalized cross
// product per non-pivot column.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m, std::size_t cols) {
  const auto piv = m.empty() ? std::vector<std::size_t>{} : pivot_columns(m);
  // Independent rows restricted to the pivot columns.
  Matrix<F> basis_rows;
  for (const auto& row : m) {
    if (basis_rows.size() == piv.size()) break;
    auto trial = basis_rows;
    trial.push_back(row);
    if (rank(trial) == trial.size()) basis_rows = std::move(trial);
  }
  Matrix<F> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(piv.begin(), piv.end(), free) != piv.end()) continue;
    std::vector<std::size_t> sub = piv;
    sub.insert(std::upper_bound(sub.begin(), sub.end(), free), free);
    Matrix<F> restricted;
    for (const auto& row : basis_rows) {
      Vector<F> r;
      for (auto c : sub) r.push_back(row[c]);
      restricted.push_back(std::move(r));
    }
    Vector<F> w = piv.empty() ? Vector<F>{F(1)} : cross_minors(restricted);
    Vector<F> x(cols, F(0));
    for (std::size_t k = 0; k < sub.size(); ++k) x[sub[k]] = w[k];
    make_primitive(x);
    out.push_back(std::move(x));
  }
  return out;
}

template <class F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.size();
  if (n == 0) return F(1);
  int swaps = 0;
  auto pivots = bareiss(m, &swaps);
  if (pivots.size() < n) return F(0);
  return swaps % 2 ? F(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

template <class F>
int determinant_sign(const Matrix<F>& m) {
  return sign_of(determinant(m));
}

// Columns of adj(b) scaled by sign(det b): positive multiples of the columns
// of the inverse. b must be invertible.
template <class F>
Matrix<F> positive_inverse_columns(const Matrix<F>& b) {
  const std::size_t n = b.size();
  const int s = determinant_sign(b);
  if (s == 0) throw InvariantViolation("singular basis matrix");
  Matrix<F> cols(n, Vector<F>(n, F(0)));
  if (n == 1) {
    cols[0][0] = F(s);
    return cols;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<F> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        Vector<F> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(b[r][c]);
        minor.push_back(std::move(row));
      }
      F cof = determinant(std::move(minor));
      // adj(b)[j][i] = (-1)^{i+j} det(minor_ij); column i of adj(b).
      cols[i][j] = ((i + j) % 2 == 0) == (s > 0) ? cof : F(-cof);
    }
  return cols;
}

template <class F>
Vector<F> project(const Vector<F>& v, const std::vector<std::size_t>& coords) {
  Vector<F> out;
  out.reserve(coords.size());
  for (auto c : coords) out.push_back(v[c]);
  return out;
}

}  // namespace linalg

template <class F>
struct ConeFacet {
  std::vector<F> normal;  // normal . g >= 0 for every generator g
  IndexMask incident = 0;  // generators with normal . g = 0
};

// The cone spanned by a list of vectors in F^n.
//
// Facets live in the linear span of the generators. They are computed in the
// pivot coordinates of that span and pulled back with zeros elsewhere;
// `equations` spans the functionals vanishing on every generator.
template <class F>
class ConeHull {
 public:
  explicit ConeHull(std::vector<std::vector<F>> generators);

  const std::vector<std::vector<F>>& generators() const { return gens_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_coordinates() const { return pivots_; }
  const std::vector<ConeFacet<F>>& facets() const { return facets_; }
  const std::vector<std::vector<F>>& equations() const { return equations_; }
  IndexMask all() const { return gens_.size() == 64 ? ~IndexMask{0} : ((IndexMask{1} << gens_.size()) - 1); }

  // Rank of the listed generators.
  std::size_t rank_of(IndexMask m) const;
  // Smallest facet-intersection containing m (all generators when no facet does).
  IndexMask closure(IndexMask m) const;
  // Indices of facets containing every generator of m.
  std::vector<std::size_t> facets_containing(IndexMask m) const;

  // Sign of det of the listed generators in pivot coordinates.
  int orientation(const std::vector<std::size_t>& subset) const;

 private:
  void double_description();

  std::vector<std::vector<F>> gens_;
  std::vector<std::vector<F>> projected_;
  std::size_t ambient_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<ConeFacet<F>> facets_;
  std::vector<std::vector<F>> equations_;
};

template <class F>
ConeHull<F>::ConeHull(std::vector<std::vector<F>> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw DimensionError("hull of an empty generator list");
  if (gens_.size() > 64) throw DimensionError("at most 64 generators are supported");
  ambient_ = gens_[0].size();
  for (const auto& g : gens_)
    if (g.size() != ambient_) throw DimensionError("generators of mixed dimension");

  // Pivot columns of the generator matrix are coordinates on its row space.
  pivots_ = linalg::pivot_columns(gens_);
  if (pivots_.empty()) throw DimensionError("all generators are zero");
  // Positive rescaling leaves the cone unchanged and keeps entries small.
  for (const auto& g : gens_) {
    projected_.push_back(linalg::project(g, pivots_));
    make_primitive(projected_.back());
  }
  if (pivots_.size() < ambient_) equations_ = linalg::nullspace(gens_, ambient_);
  double_description();
}

template <class F>
void ConeHull<F>::double_description() {
  const std::size_t r = rank();
  const std::size_t n = gens_.size();

  // Insertion order: lexicographic degree vector, then input position.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::optional<Rational>>> keys;
  for (const auto& g : gens_) keys.push_back(order_key(g));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  // Greedy basis in insertion order.
  std::vector<std::size_t> basis;
  std::vector<std::vector<F>> basis_rows;
  for (auto i : order) {
    auto trial = basis_rows;
    trial.push_back(projected_[i]);
    if (linalg::rank(trial) == trial.size()) {
      basis.push_back(i);
      basis_rows = std::move(trial);
      if (basis.size() == r) break;
    }
  }

  // Dual rays with their zero sets among the processed generators.
  struct Ray {
    std::vector<F> f;
    IndexMask zeros = 0;
  };
  std::vector<Ray> rays;
  IndexMask processed = 0;
  for (auto i : basis) processed |= IndexMask{1} << i;
  for (auto& col : linalg::positive_inverse_columns(basis_rows)) {
    make_primitive(col);
    Ray ray{std::move(col), 0};
    for (auto i : basis)
      if (linalg::dot(ray.f, projected_[i]) == 0) ray.zeros |= IndexMask{1} << i;
    rays.push_back(std::move(ray));
  }

  for (auto g : order) {
    if (processed >> g & 1u) continue;
    const IndexMask bit = IndexMask{1} << g;
    std::vector<F> values;
    std::vector<int> signs;
    for (const auto& ray : rays) {
      values.push_back(linalg::dot(ray.f, projected_[g]));
      signs.push_back(sign_of(values.back()));
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (signs[i] >= 0) {
        Ray kept = rays[i];
        if (signs[i] == 0) kept.zeros |= bit;
        next.push_back(std::move(kept));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (signs[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (signs[q] >= 0) continue;
        const IndexMask common = rays[p].zeros & rays[q].zeros;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != q && mask_includes(rays[o].zeros, common)) adjacent = false;
        if (!adjacent) continue;
        // The new ray spans the kernel of its zero set, which has rank r-1;
        // computing it as a cross product avoids the extraneous factors of
        // (g.p) q - (g.q) p.
        Ray combo;
        combo.zeros = common | bit;
        std::vector<std::vector<F>> rows{projected_[g]};
        for (auto i : mask_indices(common)) {
          if (rows.size() + 1 == r) break;
          auto trial = rows;
          trial.push_back(projected_[i]);
          if (linalg::rank(trial) == trial.size()) rows = std::move(trial);
        }
        if (rows.size() + 1 != r) throw InvariantViolation("adjacent rays with a deficient common zero set");
        combo.f = r == 1 ? std::vector<F>{F(1)} : linalg::cross_minors(rows);
        // Orient by a generator on p's facet but not on q's, where the
        // positive combination is strictly positive.
        const IndexMask witness = rays[p].zeros & ~rays[q].zeros;
        if (witness == 0) throw InvariantViolation("nested zero sets of extreme rays");
        const int orient = sign_of(linalg::dot(combo.f, projected_[mask_indices(witness)[0]]));
        if (orient == 0) throw InvariantViolation("degenerate ray orientation");
        if (orient < 0)
          for (auto& c : combo.f) c = -c;
        make_primitive(combo.f);
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
    processed |= bit;
  }

  for (auto& ray : rays) {
    ConeFacet<F> facet;
    facet.normal.assign(ambient_, F(0));
    for (std::size_t k = 0; k < r; ++k) facet.normal[pivots_[k]] = ray.f[k];
    facet.incident = ray.zeros;
    if (facet.incident == all()) throw InvariantViolation("dual ray vanishes on the whole span");
    facets_.push_back(std::move(facet));
  }
  std::sort(facets_.begin(), facets_.end(), [](const ConeFacet<F>& a, const ConeFacet<F>& b) {
    return mask_indices(a.incident) < mask_indices(b.incident);
  });
}

template <class F>
std::size_t ConeHull<F>::rank_of(IndexMask m) const {
  std::vector<std::vector<F>> rows;
  for (auto i : mask_indices(m)) rows.push_back(projected_[i]);
  return linalg::rank(rows);
}

template <class F>
std::vector<std::size_t> ConeHull<F>::facets_containing(IndexMask m) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (mask_includes(facets_[i].incident, m)) out.push_back(i);
  return out;
}

template <class F>
IndexMask ConeHull<F>::closure(IndexMask m) const {
  IndexMask c = all();
  for (auto i : facets_containing(m)) c &= facets_[i].incident;
  return c;
}

template <class F>
int ConeHull<F>::orientation(const std::vector<std::size_t>& subset) const {
  if (subset.size() != rank()) throw DimensionError("orientation needs exactly rank-many generators");
  std::vector<std::vector<F>> rows;
  for (auto i : subset) {
    if (i >= gens_.size()) throw DimensionError("generator index out of range");
    rows.push_back(projected_[i]);
  }
  return linalg::determinant_sign(rows);
}

// ---------------------------------------------------------------------------
// Affine wrapper.

template <class F>
struct Functional {
  std::vector<F> coeffs;
  F offset = F(0);
  // f . x + f0
  F apply_point(const std::vector<F>& x) const {
    return linalg::dot(coeffs, x) + offset;
  }
  F apply_ray(const std::vector<F>& x) const { return linalg::dot(coeffs, x); }
  bool is_zero() const {
    return offset == 0 && std::all_of(coeffs.begin(), coeffs.end(), [](const F& c) { return c == 0; });
  }
};

template <class F>
struct GeneratorSet {
  std::vector<std::vector<F>> points;
  std::vector<std::vector<F>> rays;

  std::size_t dim() const { return points.empty() ? 0 : points[0].size(); }
  void validate() const {
    if (points.empty()) throw DimensionError("a generator set needs at least one point");
    for (const auto& v : points)
      if (v.size() != dim()) throw DimensionError("points of mixed dimension");
    for (const auto& v : rays)
      if (v.size() != dim()) throw DimensionError("ray dimension differs from point dimension");
  }
  // Point i becomes (1, p_i); ray j becomes (0, r_j) at index points.size() + j.
  std::vector<std::vector<F>> homogenized() const {
    std::vector<std::vector<F>> out;
    for (const auto& p : points) {
      std::vector<F> h{F(1)};
      h.insert(h.end(), p.begin(), p.end());
      out.push_back(std::move(h));
    }
    for (const auto& q : rays) {
      std::vector<F> h{F(0)};
      h.insert(h.end(), q.begin(), q.end());
      out.push_back(std::move(h));
    }
    return out;
  }
};

template <class F>
struct FaceRecord {
  std::vector<std::size_t> vertex_indices;  // point generators on the face
  std::vector<std::size_t> ray_indices;     // ray generators in its recession cone
  int dim = -1;
  Functional<F> supporting;                 // zero for the whole polyhedron
  IndexMask generators = 0;                 // in cone numbering
  std::vector<std::size_t> facets;          // indices of facets containing the face
};

// Faces graded by dimension with the Hasse diagram of inclusion. faces[0] is
// the empty face and faces.back() the whole polyhedron.
template <class F>
struct FaceLattice {
  std::vector<FaceRecord<F>> faces;
  std::vector<std::vector<std::size_t>> covers;      // faces[i] is a facet of faces[j] for j in covers[i]
  std::vector<std::vector<std::size_t>> covered_by;  // inverse relation

  int dim() const { return faces.back().dim; }
  std::vector<std::size_t> of_dim(int k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].dim == k) out.push_back(i);
    return out;
  }
  // f_0, ..., f_{dim-1}
  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (int k = 0; k < dim(); ++k) f.push_back(of_dim(k).size());
    return f;
  }
  bool leq(std::size_t a, std::size_t b) const { return mask_includes(faces[b].generators, faces[a].generators); }
};

namespace detail {

// All nonempty intersections of facet incidence sets, plus everything.
template <class F>
std::set<IndexMask> facet_intersections(const ConeHull<F>& hull) {
  std::set<IndexMask> seen{hull.all()};
  std::vector<IndexMask> frontier{hull.all()};
  while (!frontier.empty()) {
    IndexMask m = frontier.back();
    frontier.pop_back();
    for (const auto& facet : hull.facets()) {
      IndexMask x = m & facet.incident;
      if (x != m && seen.insert(x).second) frontier.push_back(x);
    }
  }
  return seen;
}

template <class F>
void link_hasse(FaceLattice<F>& lat) {
  const std::size_t n = lat.faces.size();
  lat.covers.assign(n, {});
  lat.covered_by.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lat.faces[j].dim == lat.faces[i].dim + 1 && i != j && lat.leq(i, j)) {
        lat.covers[i].push_back(j);
        lat.covered_by[j].push_back(i);
      }
}

template <class F>
void sort_faces(std::vector<FaceRecord<F>>& faces) {
  std::sort(faces.begin(), faces.end(), [](const FaceRecord<F>& a, const FaceRecord<F>& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return mask_indices(a.generators) < mask_indices(b.generators);
  });
}

}  // namespace detail

// Face lattice of a cone: faces are closed generator sets, dim = rank - 1.
// Vertex indices are generator indices; the minimal face {0} is the empty face.
template <class F>
FaceLattice<F> cone_face_lattice(const ConeHull<F>& hull) {
  FaceLattice<F> lat;
  std::set<IndexMask> sets = detail::facet_intersections(hull);
  sets.insert(0);
  for (IndexMask m : sets) {
    FaceRecord<F> rec;
    rec.generators = m;
    rec.vertex_indices = mask_indices(m);
    rec.dim = m == 0 ? -1 : static_cast<int>(hull.rank_of(m)) - 1;
    rec.facets = hull.facets_containing(m);
    rec.supporting.coeffs.assign(hull.ambient_dim(), F(0));
    if (m != hull.all())
      for (auto f : rec.facets)
        for (std::size_t k = 0; k < hull.ambient_dim(); ++k)
          rec.supporting.coeffs[k] += hull.facets()[f].normal[k];
    lat.faces.push_back(std::move(rec));
  }
  // The zero face may coincide with a closed set of zero rank.
  std::vector<FaceRecord<F>> unique;
  for (auto& rec : lat.faces)
    if (rec.generators == 0 || rec.dim >= 0) unique.push_back(std::move(rec));
  lat.faces = std::move(unique);
  detail::sort_faces(lat.faces);
  detail::link_hasse(lat);
  return lat;
}

// Convex hull of points plus the cone of rays.
template <class F>
class Polyhedron {
 public:
  explicit Polyhedron(GeneratorSet<F> g) : gens_((g.validate(), std::move(g))), cone_(gens_.homogenized()) {}

  const GeneratorSet<F>& generators() const { return gens_; }
  const ConeHull<F>& cone() const { return cone_; }
  std::size_t point_count() const { return gens_.points.size(); }

  // Affine dimension.
  int dim() const { return static_cast<int>(cone_.rank()) - 1; }

  // Facets f . x + f0 >= 0 (far faces with no point excluded).
  std::vector<Functional<F>> facets() const {
    std::vector<Functional<F>> out;
    for (auto i : facet_indices()) out.push_back(to_functional(cone_.facets()[i].normal));
    return out;
  }
  // Cone-facet indices that are facets of the polyhedron.
  std::vector<std::size_t> facet_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cone_.facets().size(); ++i)
      if (cone_.facets()[i].incident & point_mask()) out.push_back(i);
    return out;
  }
  // Affine equations vanishing on the polyhedron.
  std::vector<Functional<F>> equations() const {
    std::vector<Functional<F>> out;
    for (const auto& e : cone_.equations()) out.push_back(to_functional(e));
    return out;
  }
  // Points on facet i (of facet_indices order), then rays in its recession cone.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> incidence(std::size_t facet) const {
    return split(cone_.facets()[facet_indices().at(facet)].incident);
  }

  FaceLattice<F> face_lattice() const {
    FaceLattice<F> lat;
    const IndexMask points = point_mask();
    std::vector<std::size_t> allowed = facet_indices();
    // Faces are intersections of polyhedron facets that keep a point.
    std::set<IndexMask> seen{cone_.all()};
    std::vector<IndexMask> frontier{cone_.all()};
    while (!frontier.empty()) {
      IndexMask m = frontier.back();
      frontier.pop_back();
      for (auto i : allowed) {
        IndexMask x = m & cone_.facets()[i].incident;
        if (x != m && (x & points) && seen.insert(x).second) frontier.push_back(x);
      }
    }
    FaceRecord<F> empty;
    empty.supporting.coeffs.assign(gens_.dim(), F(0));
    empty.facets = allowed;
    lat.faces.push_back(empty);
    for (IndexMask m : seen) {
      FaceRecord<F> rec;
      rec.generators = m;
      std::tie(rec.vertex_indices, rec.ray_indices) = split(m);
      rec.dim = static_cast<int>(cone_.rank_of(m)) - 1;
      for (auto i : allowed)
        if (mask_includes(cone_.facets()[i].incident, m)) rec.facets.push_back(i);
      std::vector<F> sum(gens_.dim() + 1, F(0));
      if (m != cone_.all())
        for (auto f : rec.facets)
          for (std::size_t k = 0; k <= gens_.dim(); ++k) sum[k] += cone_.facets()[f].normal[k];
      rec.supporting = to_functional(sum);
      // Facet numbering follows facet_indices().
      for (auto& f : rec.facets) f = static_cast<std::size_t>(std::find(allowed.begin(), allowed.end(), f) - allowed.begin());
      lat.faces.push_back(std::move(rec));
    }
    detail::sort_faces(lat.faces);
    detail::link_hasse(lat);
    return lat;
  }

  // Faces with no ray in their recession cone.
  std::vector<std::size_t> bounded_faces(const FaceLattice<F>& lat) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lat.faces.size(); ++i)
      if (lat.faces[i].dim >= 0 && lat.faces[i].ray_indices.empty()) out.push_back(i);
    return out;
  }

  // Sign of det of the homogenized listed points, in pivot coordinates of the
  // affine hull. The subset must have dim + 1 elements.
  int orientation(const std::vector<std::size_t>& point_subset) const {
    return cone_.orientation(point_subset);
  }

  std::pair<int, std::vector<std::vector<F>>> affine_hull() const {
    std::vector<std::vector<F>> basis{gens_.points[0]};
    const auto& base = gens_.points[0];
    std::vector<std::vector<F>> dirs;
    for (std::size_t i = 1; i < gens_.points.size(); ++i) {
      std::vector<F> d(base.size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = gens_.points[i][k] - base[k];
      dirs.push_back(std::move(d));
    }
    for (const auto& r : gens_.rays) dirs.push_back(r);
    for (auto& row : linalg::echelon(dirs).rows) basis.push_back(std::move(row));
    return {dim(), basis};
  }

 private:
  IndexMask point_mask() const {
    return gens_.points.size() >= 64 ? ~IndexMask{0} : (IndexMask{1} << gens_.points.size()) - 1;
  }
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split(IndexMask m) const {
    std::vector<std::size_t> pts, rays;
    for (auto i : mask_indices(m))
      (i < gens_.points.size() ? pts : rays).push_back(i < gens_.points.size() ? i : i - gens_.points.size());
    return {pts, rays};
  }
  Functional<F> to_functional(const std::vector<F>& h) const {
    Functional<F> f;
    f.offset = h[0];
    f.coeffs.assign(h.begin() + 1, h.end());
    return f;
  }

  GeneratorSet<F> gens_;
  ConeHull<F> cone_;
};

}  // namespace tropohull
