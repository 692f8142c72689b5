#include "tropohull/lifting.hpp"

#include "tropohull/errors.hpp"

#include <algorithm>
#include <random>

namespace tropohull {

void validate(const Lift& lift) {
  if (lift.source.size() != lift.vectors.size()) throw InvariantViolation("lift: point count mismatch");
  for (std::size_t i = 0; i < lift.source.size(); ++i) {
    const auto& v = lift.vectors[i];
    if (v.size() != lift.source[i].dim()) throw InvariantViolation("lift: dimension mismatch at point " + std::to_string(i));
    for (const auto& x : v)
      if (x.sign() <= 0) throw InvariantViolation("lift: non-positive coordinate at point " + std::to_string(i));
    if (degree_point(v) != lift.source[i])
      throw InvariantViolation("lift: degrees of point " + std::to_string(i) + " are " + degree_point(v).to_string() +
                               ", expected " + lift.source[i].to_string());
  }
}

Lift hull_lift(const std::vector<TropicalPoint>& points) {
  Lift lift;
  lift.source = points;
  lift.kind = LiftKind::hull;
  lift.label = "hull";
  for (const auto& p : points) {
    KVector v;
    for (const auto& c : p.coords()) v.push_back(PuiseuxNumber::monomial(1, c));
    lift.vectors.push_back(std::move(v));
  }
  validate(lift);
  return lift;
}

namespace {

bool all_maximal_minors_nonzero(const std::vector<KVector>& vectors) {
  const auto pivots = linalg::pivot_columns(vectors);
  const std::size_t r = pivots.size(), n = vectors.size();
  std::vector<KVector> projected;
  for (const auto& v : vectors) projected.push_back(linalg::project(v, pivots));
  std::vector<std::size_t> subset(r);
  for (std::size_t i = 0; i < r; ++i) subset[i] = i;
  // Lexicographic r-subsets of {0..n-1}.
  while (true) {
    std::vector<KVector> rows;
    for (auto i : subset) rows.push_back(projected[i]);
    if (linalg::determinant(std::move(rows)) == 0) return false;
    std::size_t k = r;
    while (k > 0 && subset[k - 1] == n - r + k - 1) --k;
    if (k == 0) return true;
    ++subset[k - 1];
    for (std::size_t j = k; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

Lift generic_lift(const std::vector<TropicalPoint>& points, std::uint64_t seed, std::size_t budget) {
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Lift lift;
    lift.source = points;
    lift.kind = LiftKind::generic;
    lift.seed = seed;
    lift.label = "generic(" + std::to_string(seed) + ")";
    for (const auto& p : points) {
      KVector v;
      for (const auto& c : p.coords()) {
        Rational coeff(static_cast<long>(1 + rng() % 15), 16);
        Rational drop(static_cast<long>(1 + rng() % 7), 16);
        coeff.canonicalize();
        drop.canonicalize();
        v.push_back(PuiseuxNumber::monomial(1, c) + PuiseuxNumber::monomial(coeff, c - drop));
      }
      lift.vectors.push_back(std::move(v));
    }
    if (!all_maximal_minors_nonzero(lift.vectors)) continue;
    validate(lift);
    return lift;
  }
  throw BudgetExceeded("generic_lift: no nondegenerate lift within " + std::to_string(budget) + " samples");
}

Lift explicit_lift(const std::vector<TropicalPoint>& points, std::vector<KVector> vectors, std::string label) {
  Lift lift{points, std::move(vectors), LiftKind::explicit_, 0, std::move(label)};
  validate(lift);
  return lift;
}

TropicalPoint degree_point(const KVector& x) {
  RationalVector d;
  for (const auto& c : x) {
    auto deg = c.degree();
    if (!deg) throw DomainError("degree of a zero coordinate");
    d.push_back(*deg);
  }
  return TropicalPoint(std::move(d));
}

TropicalHalfspace halfspace_image(const KVector& f) {
  std::vector<TropicalHyperplane::Coordinate> apex;
  SectorSet positive;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto deg = f[i].degree();
    apex.push_back(deg ? std::optional<Rational>(-*deg) : std::nullopt);
    if (f[i].sign() > 0) positive.insert(i);
  }
  if (std::none_of(f.begin(), f.end(), [](const PuiseuxNumber& c) { return !c.is_zero(); }))
    throw DomainError("halfspace_image: zero functional");
  return TropicalHalfspace(TropicalHyperplane(std::move(apex)), positive);
}

std::vector<int> sign_vector(const KVector& f) {
  std::vector<int> s;
  for (const auto& c : f) s.push_back(c.sign());
  return s;
}

std::vector<std::size_t> image_cells(const CellComplex& complex, const std::vector<TropicalPoint>& points) {
  std::vector<std::size_t> out;
  if (points.empty()) return out;
  for (auto id : complex.bounded_cells())
    if (contains(points, complex.cell(id).witness)) out.push_back(id);
  return out;
}

LiftAnalysis::LiftAnalysis(Lift lift, const CellComplex& complex) : lift_(std::move(lift)), hull_(lift_.vectors) {
  auto lattice = cone_face_lattice(hull_);
  const int facet_dim = dim() - 1;
  for (const auto& rec : lattice.faces) {
    if (rec.dim < 0) continue;
    LiftFace face;
    face.generators = rec.generators;
    face.dim = rec.dim;
    std::vector<TropicalPoint> w;
    for (auto i : rec.vertex_indices) w.push_back(lift_.source[i]);
    face.cells = image_cells(complex, w);
    for (auto c : face.cells) face.image_dim = std::max(face.image_dim, complex.cell(c).dim);
    if (rec.dim == facet_dim && rec.facets.size() == 1) face.normal = hull_.facets()[rec.facets[0]].normal;
    faces_.push_back(std::move(face));
  }
}

std::vector<std::size_t> LiftAnalysis::faces_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == k) out.push_back(i);
  return out;
}

std::vector<std::size_t> LiftAnalysis::fatoms(int k) const {
  std::vector<std::size_t> out;
  for (auto i : faces_of_dim(k))
    if (faces_[i].image_dim == k) out.push_back(i);
  return out;
}

std::vector<std::size_t> LiftAnalysis::boundary_image() const {
  std::vector<std::size_t> out;
  for (auto i : facets()) out.insert(out.end(), faces_[i].cells.begin(), faces_[i].cells.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> LiftAnalysis::facets_inside(const std::vector<std::size_t>& cells) const {
  std::vector<std::size_t> out;
  for (auto i : facets())
    if (std::includes(cells.begin(), cells.end(), faces_[i].cells.begin(), faces_[i].cells.end()) &&
        !faces_[i].cells.empty())
      out.push_back(i);
  return out;
}

bool LiftAnalysis::simplicial() const {
  for (auto i : facets())
    if (static_cast<int>(mask_indices(faces_[i].generators).size()) != faces_[i].dim + 1) return false;
  return true;
}

bool interior_by_halfspaces(const LiftAnalysis& analysis, const TropicalPoint& x) {
  if (analysis.dim() + 1 != static_cast<int>(x.dim()))
    throw DomainError("interior_by_halfspaces: the polytope is not full-dimensional");
  for (auto i : analysis.facets())
    if (halfspace_position(x, halfspace_image(*analysis.faces()[i].normal)) != Position::interior) return false;
  return true;
}

std::string to_string(LiftKind kind) {
  switch (kind) {
    case LiftKind::hull: return "hull";
    case LiftKind::generic: return "generic";
    case LiftKind::explicit_: return "explicit";
  }
  return "?";
}

}  // namespace tropohull
