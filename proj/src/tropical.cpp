#include "tropohull/tropical.hpp"

#include "tropohull/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropohull {

SectorSet SectorSet::of(std::initializer_list<std::size_t> indices) {
  SectorSet s;
  for (auto i : indices) s.insert(i);
  return s;
}

std::vector<std::size_t> SectorSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SectorSet::to_string() const {
  std::string out;
  for (auto i : indices()) {
    if (i + 1 >= 10 && !out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out.empty() ? "{}" : out;
}

// ---------------------------------------------------------------------------

TropicalPoint::TropicalPoint(RationalVector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw DimensionError("tropical point needs at least 2 coordinates");
  const Rational base = coords_[0];
  for (auto& c : coords_) c -= base;
}

TropicalPoint TropicalPoint::from_integers(std::initializer_list<long> coords) {
  RationalVector v;
  for (long c : coords) v.emplace_back(c);
  return TropicalPoint(std::move(v));
}

std::string TropicalPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].get_str();
  }
  return out + ")";
}

TropicalPoint canonicalize(std::span<const Rational> coords) {
  return TropicalPoint(RationalVector(coords.begin(), coords.end()));
}

// ---------------------------------------------------------------------------

TropicalHyperplane::TropicalHyperplane(std::vector<Coordinate> apex) : apex_(std::move(apex)) {
  std::size_t finite = 0;
  std::optional<Rational> base;
  for (const auto& c : apex_)
    if (c) {
      ++finite;
      if (!base) base = *c;
    }
  if (finite < 2) throw DomainError("tropical hyperplane needs at least two finite apex coordinates");
  for (auto& c : apex_)
    if (c) *c -= *base;
}

TropicalHyperplane::TropicalHyperplane(const TropicalPoint& apex) {
  std::vector<Coordinate> coords(apex.coords().begin(), apex.coords().end());
  *this = TropicalHyperplane(std::move(coords));
}

SectorSet TropicalHyperplane::finite_coordinates() const {
  SectorSet s;
  for (std::size_t i = 0; i < apex_.size(); ++i)
    if (apex_[i]) s.insert(i);
  return s;
}

std::string TropicalHyperplane::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < apex_.size(); ++i) {
    if (i) out += ',';
    out += apex_[i] ? apex_[i]->get_str() : std::string("inf");
  }
  return out + ")";
}

TropicalHalfspace::TropicalHalfspace(TropicalHyperplane apex, SectorSet sectors)
    : apex_(std::move(apex)), sectors_(sectors) {
  const SectorSet finite = apex_.finite_coordinates();
  if (!finite.includes(sectors_) || sectors_.empty() || sectors_ == finite)
    throw DomainError("halfspace sectors must be a nonempty proper subset of the finite apex coordinates");
}

SectorSet TropicalHalfspace::complement() const {
  return SectorSet(apex_.finite_coordinates().bits() & ~sectors_.bits());
}

std::string TropicalHalfspace::to_string() const {
  return apex_.to_string() + " sectors " + sectors_.to_string();
}

// ---------------------------------------------------------------------------

TropicalMatrix::TropicalMatrix(std::vector<RationalVector> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != rows_.size()) throw DimensionError("tropical matrix must be square");
}

TropicalMatrix TropicalMatrix::from_columns(std::span<const TropicalPoint> columns) {
  const std::size_t d = columns.size();
  std::vector<RationalVector> rows(d, RationalVector(d));
  for (std::size_t j = 0; j < d; ++j) {
    if (columns[j].dim() != d) throw DimensionError("need d columns of dimension d");
    for (std::size_t i = 0; i < d; ++i) rows[i][j] = columns[j][i];
  }
  return TropicalMatrix(std::move(rows));
}

TropicalMatrix TropicalMatrix::with_columns_swapped(std::size_t a, std::size_t b) const {
  auto rows = rows_;
  for (auto& r : rows) std::swap(r[a], r[b]);
  return TropicalMatrix(std::move(rows));
}

TropicalMatrix TropicalMatrix::with_column_shifted(std::size_t col, const Rational& shift) const {
  auto rows = rows_;
  for (auto& r : rows) r[col] += shift;
  return TropicalMatrix(std::move(rows));
}

// ---------------------------------------------------------------------------

TropicalPoint tconv_combination(std::span<const Rational> coeffs, std::span<const TropicalPoint> points) {
  if (points.empty()) throw DimensionError("tropical combination of no points");
  if (coeffs.size() != points.size()) throw DimensionError("coefficient count differs from point count");
  const std::size_t d = points[0].dim();
  RationalVector out(d);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != d) throw DimensionError("points of different dimension");
    for (std::size_t j = 0; j < d; ++j) {
      Rational v = coeffs[i] + points[i][j];
      if (i == 0 || v > out[j]) out[j] = std::move(v);
    }
  }
  return TropicalPoint(std::move(out));
}

Membership membership(const TropicalPoint& x, std::span<const TropicalPoint> points) {
  if (points.empty()) throw DimensionError("membership in the hull of no points");
  Membership m;
  m.coeffs.reserve(points.size());
  for (const auto& v : points) {
    if (v.dim() != x.dim()) throw DimensionError("point dimension mismatch");
    Rational c = x[0] - v[0];
    for (std::size_t j = 1; j < x.dim(); ++j) c = std::min(c, Rational(x[j] - v[j]));
    m.coeffs.push_back(std::move(c));
  }
  m.inside = tconv_combination(m.coeffs, points) == x;
  return m;
}

bool contains(std::span<const TropicalPoint> points, const TropicalPoint& x) {
  return membership(x, points).inside;
}

SectorSet sectors_of(const TropicalPoint& x, const TropicalHyperplane& h) {
  if (x.dim() != h.dim()) throw DimensionError("point and hyperplane dimension differ");
  SectorSet best;
  std::optional<Rational> top;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!h.finite(i)) continue;
    Rational v = x[i] - *h.apex()[i];
    if (!top || v > *top) {
      top = v;
      best = SectorSet();
    }
    if (v == *top) best.insert(i);
  }
  return best;
}

Position halfspace_position(const TropicalPoint& x, const TropicalHalfspace& hs) {
  const auto& h = hs.hyperplane();
  if (x.dim() != h.dim()) throw DimensionError("point and halfspace dimension differ");
  std::optional<Rational> in, out;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!h.finite(i)) continue;
    Rational v = x[i] - *h.apex()[i];
    auto& slot = hs.sectors().contains(i) ? in : out;
    if (!slot || v > *slot) slot = v;
  }
  if (*in > *out) return Position::interior;
  if (*in == *out) return Position::boundary;
  return Position::outside;
}

std::string to_string(Position p) {
  switch (p) {
    case Position::interior: return "interior";
    case Position::boundary: return "boundary";
    case Position::outside: return "outside";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Optimal assignment (Hungarian method, potentials form) over exact rationals.

namespace {

struct Assignment {
  bool feasible = false;
  Rational value;
  std::vector<std::size_t> row_to_col;
};

// Maximizes sum a[i][perm(i)] avoiding cells where forbidden[i][j] is set.
Assignment max_assignment(const TropicalMatrix& m, const std::vector<std::vector<bool>>& forbidden) {
  const std::size_t n = m.size();
  Assignment result;
  if (n == 0) {
    result.feasible = true;
    return result;
  }
  Rational span = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) span = std::max(span, Rational(abs(m.at(i, j))));
  // Forbidden cells cost more than any feasible assignment can save.
  const Rational penalty = Rational(2 * static_cast<long>(n) + 2) * (span + 1);
  auto cost = [&](std::size_t i, std::size_t j) -> Rational {
    return forbidden[i][j] ? penalty : Rational(-m.at(i, j));
  };
  const Rational inf = penalty * Rational(4 * static_cast<long>(n) + 4) + 1;

  // 1-based arrays as in the classical formulation.
  std::vector<Rational> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<Rational> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      Rational delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  result.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.row_to_col[p[j] - 1] = j - 1;
  result.feasible = true;
  result.value = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (forbidden[i][result.row_to_col[i]]) result.feasible = false;
    result.value += m.at(i, result.row_to_col[i]);
  }
  return result;
}

}  // namespace

Rational tropical_det(const TropicalMatrix& m) {
  std::vector<std::vector<bool>> none(m.size(), std::vector<bool>(m.size(), false));
  return max_assignment(m, none).value;
}

int permutation_sign(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

TropicalSign tropical_sign(const TropicalMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> forbidden(n, std::vector<bool>(n, false));
  Assignment best = max_assignment(m, forbidden);
  TropicalSign out;
  out.value = best.value;
  // The optimum is unique iff forbidding any one of its cells strictly lowers it.
  for (std::size_t i = 0; i < n; ++i) {
    forbidden[i][best.row_to_col[i]] = true;
    Assignment alt = max_assignment(m, forbidden);
    forbidden[i][best.row_to_col[i]] = false;
    if (alt.feasible && alt.value == best.value) return out;
  }
  out.sign = permutation_sign(best.row_to_col);
  out.permutation = best.row_to_col;
  return out;
}

Chirotope chirotope(std::span<const TropicalPoint> points) {
  if (points.empty()) throw DimensionError("chirotope of no points");
  const std::size_t d = points[0].dim();
  if (points.size() < d) throw DimensionError("chirotope needs at least d points");
  Chirotope out;
  std::vector<std::size_t> subset(d);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    std::vector<TropicalPoint> cols;
    for (auto i : subset) cols.push_back(points[i]);
    out[subset] = tropical_sign(TropicalMatrix::from_columns(cols)).sign;
    // next d-subset in lexicographic order
    std::size_t k = d;
    while (k > 0 && subset[k - 1] == points.size() - d + k - 1) --k;
    if (k == 0) break;
    ++subset[k - 1];
    for (std::size_t j = k; j < d; ++j) subset[j] = subset[j - 1] + 1;
  }
  return out;
}

bool is_general_position(std::span<const TropicalPoint> points) {
  for (const auto& [subset, s] : chirotope(points))
    if (s == 0) return false;
  return true;
}

std::vector<TropicalPoint> tropical_segment(const TropicalPoint& p, const TropicalPoint& q) {
  if (p.dim() != q.dim()) throw DimensionError("segment endpoints of different dimension");
  // Points max(lambda + p, q); the shape changes only at lambda = q_j - p_j.
  RationalVector lambdas;
  for (std::size_t j = 0; j < p.dim(); ++j) lambdas.push_back(q[j] - p[j]);
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
  std::vector<TropicalPoint> out;
  for (const auto& lambda : lambdas) {
    RationalVector x(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) x[j] = std::max(Rational(lambda + p[j]), q[j]);
    TropicalPoint pt(std::move(x));
    if (out.empty() || !(out.back() == pt)) out.push_back(std::move(pt));
  }
  return out;
}

std::vector<std::size_t> extreme_points(std::span<const TropicalPoint> points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<TropicalPoint> others;
    bool duplicate = false;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      if (points[j] == points[i] && j < i) duplicate = true;
      if (!(points[j] == points[i])) others.push_back(points[j]);
    }
    if (duplicate) continue;
    if (others.empty() || !contains(others, points[i])) out.push_back(i);
  }
  return out;
}

}  // namespace tropohull
