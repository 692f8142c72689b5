#include "tropohull/covector.hpp"

#include "tropohull/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tropohull {

SectorSet Covector::coverage() const {
  SectorSet u;
  for (auto s : sets_) u = u | s;
  return u;
}

bool Covector::contains(const Covector& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (!sets_[i].includes(other.sets_[i])) return false;
  return true;
}

Covector Covector::join(const Covector& other) const {
  std::vector<SectorSet> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = sets_[i] | other.sets_[i];
  return Covector(std::move(out));
}

std::string Covector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ',';
    out += sets_[i].to_string();
  }
  return out + ")";
}

Covector covector_of(const TropicalPoint& x, std::span<const TropicalPoint> points) {
  std::vector<SectorSet> sets;
  for (const auto& v : points) {
    if (v.dim() != x.dim()) throw DimensionError("covector_of: dimension mismatch");
    Rational best = v[0] - x[0];
    SectorSet s;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      Rational val = v[j] - x[j];
      if (val > best || j == 0) {
        best = val;
        s = SectorSet::of({j});
      } else if (val == best) {
        s.insert(j);
      }
    }
    sets.push_back(s);
  }
  return Covector(std::move(sets));
}

namespace {

// c - s*eps for an infinitesimal eps > 0.
struct Weight {
  Rational c;
  long s = 0;
  friend Weight operator+(const Weight& a, const Weight& b) { return {a.c + b.c, a.s + b.s}; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c || (a.c == b.c && a.s > b.s); }
};

// Difference constraints x_j - x_l <= w (or < w) kept as all-pairs shortest
// paths, so that feasibility can be tested one arc at a time.
class DifferenceSystem {
 public:
  explicit DifferenceSystem(std::size_t d) : d_(d), dist_(d * d) {
    for (std::size_t i = 0; i < d; ++i) slot(i, i) = Weight{0, 0};
  }

  // Arc l -> j. Returns false (leaving the system unchanged) on a negative cycle.
  bool add(std::size_t l, std::size_t j, const Rational& w, bool strict) {
    Weight arc{w, strict ? 1 : 0};
    if (const auto& back = at(j, l); back && *back + arc < Weight{0, 0}) return false;
    if (at(l, j) && !(arc < *at(l, j))) return true;
    std::vector<std::optional<Weight>> next = dist_;
    for (std::size_t a = 0; a < d_; ++a) {
      if (!at(a, l)) continue;
      const Weight head = *at(a, l) + arc;
      for (std::size_t b = 0; b < d_; ++b) {
        if (!at(j, b)) continue;
        Weight cand = head + *at(j, b);
        auto& cur = next[a * d_ + b];
        if (!cur || cand < *cur) cur = cand;
      }
    }
    dist_ = std::move(next);
    return true;
  }

  const std::optional<Weight>& at(std::size_t a, std::size_t b) const { return dist_[a * d_ + b]; }

  // A concrete point satisfying every constraint, strict ones strictly.
  RationalVector witness() const {
    // Potentials from a virtual source joined to every node by a 0-arc.
    std::vector<Weight> pot(d_, Weight{0, 0});
    for (std::size_t b = 0; b < d_; ++b)
      for (std::size_t a = 0; a < d_; ++a)
        if (at(a, b) && *at(a, b) < pot[b]) pot[b] = *at(a, b);
    // Choose eps below every slack that the infinitesimal parts must respect.
    Rational bound = 1;
    for (const auto& arc : arcs_) {
      Rational gap = arc.w - (pot[arc.j].c - pot[arc.l].c);
      if (gap > 0) {
        Rational need = gap / Rational(std::labs(pot[arc.l].s - pot[arc.j].s) + 1);
        if (need < bound) bound = need;
      }
    }
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), bound.get_den().get_mpz_t(), bound.get_num().get_mpz_t());
    if (n < 2) n = 2;
    Rational eps(Integer(1), n);
    RationalVector x(d_);
    for (std::size_t j = 0; j < d_; ++j) x[j] = pot[j].c - Rational(pot[j].s) * eps;
    return x;
  }

  void record(std::size_t l, std::size_t j, const Rational& w) { arcs_.push_back({l, j, w}); }

 private:
  struct Arc {
    std::size_t l, j;
    Rational w;
  };
  std::optional<Weight>& slot(std::size_t a, std::size_t b) { return dist_[a * d_ + b]; }

  std::size_t d_;
  std::vector<std::optional<Weight>> dist_;
  std::vector<Arc> arcs_;
};

// Adds the constraints saying argmax_j (v_j - x_j) = S. False if infeasible.
bool add_type_constraints(DifferenceSystem& sys, const TropicalPoint& v, SectorSet s) {
  const std::size_t d = v.dim();
  for (auto j : s.indices())
    for (std::size_t l = 0; l < d; ++l) {
      if (l == j) continue;
      const bool strict = !s.contains(l);
      const Rational w = v[j] - v[l];
      if (!sys.add(l, j, w, strict)) return false;
      sys.record(l, j, w);
    }
  return true;
}

int components_minus_one(std::size_t d, const Covector& type) {
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto s : type.sets()) {
    auto idx = s.indices();
    for (std::size_t k = 1; k < idx.size(); ++k) parent[find(idx[k])] = find(idx[0]);
  }
  int comps = 0;
  for (std::size_t a = 0; a < d; ++a)
    if (find(a) == a) ++comps;
  return comps - 1;
}

void enumerate(const std::vector<TropicalPoint>& points, std::size_t i, const DifferenceSystem& sys,
               std::vector<SectorSet>& chosen, std::vector<Cell>& out) {
  const std::size_t d = points[0].dim();
  if (i == points.size()) {
    Covector type(chosen);
    Cell c;
    c.dim = components_minus_one(d, type);
    c.witness = TropicalPoint(sys.witness());
    if (covector_of(c.witness, points) != type) throw InvariantViolation("cell witness has the wrong type");
    c.bounded = type.coverage() == SectorSet::full(d);
    c.type = std::move(type);
    out.push_back(std::move(c));
    return;
  }
  const std::uint32_t limit = SectorSet::full(d).bits();
  for (std::uint32_t bits = 1; bits <= limit; ++bits) {
    DifferenceSystem next = sys;
    if (!add_type_constraints(next, points[i], SectorSet(bits))) continue;
    chosen.push_back(SectorSet(bits));
    enumerate(points, i + 1, next, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

CellComplex CellComplex::decompose(std::vector<TropicalPoint> points) {
  if (points.empty()) throw DimensionError("decompose: no points");
  const std::size_t d = points[0].dim();
  for (const auto& p : points)
    if (p.dim() != d) throw DimensionError("decompose: points of mixed dimension");
  if (d > 16) throw DimensionError("decompose: at most 16 coordinates");
  CellComplex cx;
  cx.points_ = std::move(points);
  std::vector<SectorSet> chosen;
  enumerate(cx.points_, 0, DifferenceSystem(d), chosen, cx.cells_);
  std::sort(cx.cells_.begin(), cx.cells_.end(), [](const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.type < b.type;
  });
  for (std::size_t i = 0; i < cx.cells_.size(); ++i) cx.index_[cx.cells_[i].type] = i;
  return cx;
}

std::optional<std::size_t> CellComplex::find(const Covector& type) const {
  auto it = index_.find(type);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CellComplex::locate(const TropicalPoint& x) const {
  auto id = find(covector_of(x, points_));
  if (!id) throw InvariantViolation("point type missing from the decomposition");
  return *id;
}

bool CellComplex::is_face(std::size_t a, std::size_t b) const { return cells_[a].type.contains(cells_[b].type); }

std::vector<std::size_t> CellComplex::closure(std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < cells_.size(); ++a)
    if (is_face(a, b)) out.push_back(a);
  return out;
}

std::vector<std::size_t> CellComplex::star(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < cells_.size(); ++b)
    if (is_face(a, b)) out.push_back(b);
  return out;
}

bool CellComplex::closures_meet(std::size_t a, std::size_t b) const {
  const Covector j = cells_[a].type.join(cells_[b].type);
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.type.contains(j); });
}

std::vector<std::size_t> CellComplex::bounded_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].bounded) out.push_back(i);
  return out;
}

std::vector<std::size_t> CellComplex::cells_of_dim(int k, bool bounded_only) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim == k && (!bounded_only || cells_[i].bounded)) out.push_back(i);
  return out;
}

bool CellComplex::is_interior(std::size_t id) const {
  if (!cells_[id].bounded) return false;
  for (auto b : star(id))
    if (!cells_[b].bounded) return false;
  return true;
}

std::vector<std::size_t> CellComplex::interior_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (is_interior(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> CellComplex::boundary_cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].bounded && !is_interior(i)) out.push_back(i);
  return out;
}

std::vector<TropicalPoint> CellComplex::pseudovertices() const {
  std::vector<TropicalPoint> out;
  for (auto i : cells_of_dim(0)) out.push_back(cells_[i].witness);
  std::sort(out.begin(), out.end());
  return out;
}

int cell_dimension_by_constraints(const Covector& type, std::span<const TropicalPoint> points) {
  if (type.size() != points.size()) throw DimensionError("covector length differs from point count");
  const std::size_t d = points[0].dim();
  DifferenceSystem sys(d);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!add_type_constraints(sys, points[i], type[i])) throw DomainError("infeasible covector " + type.to_string());
  // x_a - x_b is pinned exactly when the two shortest paths between them close
  // a cycle of weight zero.
  std::vector<std::size_t> rep(d);
  std::iota(rep.begin(), rep.end(), 0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (sys.at(a, b) && sys.at(b, a) && sys.at(a, b)->c + sys.at(b, a)->c == 0 && rep[a] == a) rep[a] = rep[b];
  int classes = 0;
  for (std::size_t a = 0; a < d; ++a)
    if (rep[a] == a) ++classes;
  return classes - 1;
}

}  // namespace tropohull
