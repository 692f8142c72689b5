#include "tropohull/resolution.hpp"

#include "tropohull/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace tropohull {

// ---------------------------------------------------------------- monomials

bool divides(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionError("exponent vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw DimensionError("exponent vectors of different length");
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::string monomial_string(const Exponent& a) {
  static const char* names = "xyzwuvst";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += a.size() <= 8 ? std::string(1, names[i]) : "x" + std::to_string(i + 1);
    if (a[i] != 1) out += "^" + std::to_string(a[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> MonomialIdeal::normalize() {
  if (generators.empty()) throw DomainError("an ideal needs at least one generator");
  if (nvars == 0) throw DomainError("an ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.size() != nvars)
      throw DimensionError("generator with " + std::to_string(g.size()) + " exponents in " + std::to_string(nvars) +
                           " variables");
    for (long e : g)
      if (e < 0) throw DomainError("negative exponent in " + monomial_string(g));
  }
  // Input order is kept; the first copy of a duplicate survives.
  std::vector<std::string> warnings;
  std::vector<Exponent> kept;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (std::find(generators.begin(), generators.begin() + static_cast<std::ptrdiff_t>(i), g) !=
        generators.begin() + static_cast<std::ptrdiff_t>(i)) {
      warnings.push_back("dropped duplicate generator " + monomial_string(g));
      continue;
    }
    bool dominated = false;
    for (const auto& h : generators) dominated = dominated || (h != g && divides(h, g));
    if (dominated)
      warnings.push_back("dropped non-minimal generator " + monomial_string(g));
    else
      kept.push_back(g);
  }
  generators = std::move(kept);
  return warnings;
}

bool MonomialIdeal::is_minimal() const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (i != j && divides(generators[i], generators[j])) return false;
  return true;
}

std::vector<TropicalPoint> tropicalize(const MonomialIdeal& ideal) {
  std::vector<TropicalPoint> out;
  for (const auto& g : ideal.generators) {
    RationalVector c{Rational(0)};
    for (long e : g) c.emplace_back(e);
    out.emplace_back(std::move(c));
  }
  return out;
}

GeneratorSet<PuiseuxNumber> hull_polyhedron(const MonomialIdeal& ideal, const Lift& lift) {
  if (lift.vectors.size() != ideal.generators.size()) throw DimensionError("lift and ideal have different sizes");
  if (lift.source != tropicalize(ideal)) throw DomainError("the lift does not lift the tropicalized ideal");
  GeneratorSet<PuiseuxNumber> g;
  g.points = lift.vectors;
  const std::size_t d = ideal.nvars + 1;
  for (std::size_t j = 1; j < d; ++j) {
    KVector e(d, PuiseuxNumber(0));
    e[j] = PuiseuxNumber(1);
    g.rays.push_back(std::move(e));
  }
  return g;
}

// ---------------------------------------------------------------- complex

namespace {

using KMatrix = std::vector<KVector>;

KVector difference(const KVector& a, const KVector& b) {
  KVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

KMatrix restrict_columns(const KMatrix& rows, const std::vector<std::size_t>& cols) {
  KMatrix out;
  for (const auto& r : rows) out.push_back(linalg::project(r, cols));
  return out;
}

// Greedy affine basis in index order, which is the lexicographically smallest.
std::vector<std::size_t> smallest_basis(const std::vector<std::size_t>& vertices, const KMatrix& points) {
  std::vector<std::size_t> basis{vertices.front()};
  KMatrix dirs;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    dirs.push_back(difference(points[vertices[i]], points[basis.front()]));
    if (linalg::rank(dirs) == basis.size())
      basis.push_back(vertices[i]);
    else
      dirs.pop_back();
  }
  return basis;
}

// Sign of the facet spanned by `inner` in the boundary of the cell oriented by
// `outer`, with the inward vertex first: minus the orientation of
// (p - w0, w1 - w0, ...) relative to (v1 - v0, ..., vk - v0).
int incidence_sign(const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner,
                   std::size_t inward, const KMatrix& points) {
  KMatrix u;
  for (std::size_t i = 1; i < outer.size(); ++i) u.push_back(difference(points[outer[i]], points[outer[0]]));
  KMatrix w{difference(points[inward], points[inner[0]])};
  for (std::size_t i = 1; i < inner.size(); ++i) w.push_back(difference(points[inner[i]], points[inner[0]]));
  const auto cols = linalg::pivot_columns(u);
  const int a = linalg::determinant_sign(restrict_columns(u, cols));
  const int b = linalg::determinant_sign(restrict_columns(w, cols));
  if (a == 0 || b == 0) throw InvariantViolation("degenerate orientation basis");
  return -a * b;
}

}  // namespace

LabeledComplex::LabeledComplex(const MonomialIdeal& ideal, const Lift& lift) : ideal_(ideal) {
  const Polyhedron<PuiseuxNumber> poly(hull_polyhedron(ideal, lift));
  const auto lat = poly.face_lattice();
  const auto& points = poly.generators().points;
  const auto& rays = poly.generators().rays;

  IndexMask vertex_points = 0;
  for (auto i : lat.of_dim(0))
    if (lat.faces[i].ray_indices.empty()) vertex_points |= mask_of(lat.faces[i].vertex_indices);

  std::map<std::size_t, std::size_t> cell_of_face;
  const auto bounded = poly.bounded_faces(lat);
  for (auto fi : bounded) {
    const auto& face = lat.faces[fi];
    LabeledCell cell;
    cell.dim = face.dim;
    cell.vertices = mask_of(face.vertex_indices) & vertex_points;
    const auto verts = mask_indices(cell.vertices);
    cell.label = ideal.generators[verts.front()];
    for (auto v : verts) cell.label = lcm(cell.label, ideal.generators[v]);
    cell.vertex_order = smallest_basis(verts, points);
    if (static_cast<int>(cell.vertex_order.size()) != cell.dim + 1)
      throw InvariantViolation("bounded face without an affine basis of its vertices");
    cell_of_face[fi] = cells_.size();
    cells_.push_back(std::move(cell));
  }

  for (std::size_t fi = 1; fi < lat.faces.size(); ++fi) {
    const auto& face = lat.faces[fi];
    if (face.dim < 0 || fi + 1 == lat.faces.size()) continue;
    bool positive = true;
    for (const auto& r : rays)
      if (sign_of(face.supporting.apply_ray(r)) <= 0) positive = false;
    const bool is_bounded = face.ray_indices.empty();
    if (!is_bounded) ++unbounded_faces_;
    if (positive != is_bounded) bounded_matches_direction_ = false;
  }

  for (auto fi : bounded) {
    auto& cell = cells_[cell_of_face.at(fi)];
    if (cell.dim == 0) continue;
    for (auto gi : lat.covered_by[fi]) {
      const auto it = cell_of_face.find(gi);
      if (it == cell_of_face.end()) throw InvariantViolation("unbounded facet of a bounded face");
      const auto& facet = cells_[it->second];
      if (!divides(facet.label, cell.label)) throw InvariantViolation("label not monotone along a facet");
      std::size_t inward = 0;
      bool found = false;
      for (auto v : cell.vertex_order)
        if (!(facet.vertices >> v & 1)) {
          inward = v;
          found = true;
          break;
        }
      if (!found) throw InvariantViolation("facet contains the whole basis of its cell");
      cell.boundary.emplace_back(it->second, incidence_sign(cell.vertex_order, facet.vertex_order, inward, points));
    }
    std::sort(cell.boundary.begin(), cell.boundary.end());
  }

  // Reorder by dimension, then vertex list; remap boundary indices.
  std::vector<std::size_t> order(cells_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cells_[a].dim != cells_[b].dim) return cells_[a].dim < cells_[b].dim;
    return mask_indices(cells_[a].vertices) < mask_indices(cells_[b].vertices);
  });
  std::vector<std::size_t> position(cells_.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::vector<LabeledCell> sorted;
  for (auto i : order) {
    LabeledCell c = std::move(cells_[i]);
    for (auto& [g, s] : c.boundary) g = position[g];
    std::sort(c.boundary.begin(), c.boundary.end());
    sorted.push_back(std::move(c));
  }
  cells_ = std::move(sorted);

  chain_complex();  // throws on d^2 != 0
}

int LabeledComplex::dim() const {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, c.dim);
  return d;
}

std::vector<std::size_t> LabeledComplex::ranks() const {
  std::vector<std::size_t> r(static_cast<std::size_t>(dim() + 1), 0);
  for (const auto& c : cells_) ++r[static_cast<std::size_t>(c.dim)];
  return r;
}

std::vector<std::size_t> LabeledComplex::cells_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim == k) out.push_back(i);
  return out;
}

namespace {

ChainComplex chain_of(const std::vector<LabeledCell>& cells, const std::vector<bool>& keep) {
  int top = -1;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (keep[i]) top = std::max(top, cells[i].dim);
  if (top < 0) return ChainComplex({}, {});
  std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(top + 1));
  std::vector<std::size_t> index(cells.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (keep[i]) {
      auto& v = by_dim[static_cast<std::size_t>(cells[i].dim)];
      index[i] = v.size();
      v.push_back(i);
    }
  std::vector<std::size_t> ranks;
  for (const auto& v : by_dim) ranks.push_back(v.size());
  std::vector<IntMatrix> boundaries;
  for (int k = 1; k <= top; ++k) {
    IntMatrix m(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)]);
    for (auto c : by_dim[static_cast<std::size_t>(k)])
      for (const auto& [g, s] : cells[c].boundary) {
        if (!keep[g]) throw InvariantViolation("subcomplex is not closed under facets");
        m.at(index[g], index[c]) = s;
      }
    boundaries.push_back(std::move(m));
  }
  return ChainComplex(std::move(ranks), std::move(boundaries));
}

}  // namespace

ChainComplex LabeledComplex::chain_complex(const Exponent& b) const {
  std::vector<bool> keep(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) keep[i] = divides(cells_[i].label, b);
  return chain_of(cells_, keep);
}

ChainComplex LabeledComplex::chain_complex() const { return chain_of(cells_, std::vector<bool>(cells_.size(), true)); }

bool LabeledComplex::simplicial() const {
  for (const auto& c : cells_)
    if (static_cast<int>(mask_indices(c.vertices).size()) != c.dim + 1) return false;
  return true;
}

std::vector<IndexMask> LabeledComplex::key() const {
  std::vector<IndexMask> k;
  for (const auto& c : cells_) k.push_back(c.vertices);
  std::sort(k.begin(), k.end());
  return k;
}

// ---------------------------------------------------------------- reports

std::vector<IndexMask> scarf_complex(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.generators.size();
  if (n > 20) throw DomainError("the Scarf complex scan supports at most 20 generators");
  std::map<Exponent, std::pair<std::size_t, IndexMask>> seen;  // lcm -> (count, first subset)
  std::vector<Exponent> lcms(std::size_t{1} << n);
  for (IndexMask s = 1; s < (IndexMask{1} << n); ++s) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    const IndexMask rest = s & (s - 1);
    lcms[s] = rest ? lcm(lcms[rest], ideal.generators[low]) : ideal.generators[low];
    auto [it, inserted] = seen.try_emplace(lcms[s], 0, s);
    ++it->second.first;
  }
  std::vector<IndexMask> out;
  for (const auto& [l, entry] : seen)
    if (entry.first == 1) out.push_back(entry.second);
  std::sort(out.begin(), out.end(), [](IndexMask a, IndexMask b) {
    const auto pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : mask_indices(a) < mask_indices(b);
  });
  return out;
}

std::vector<Exponent> lcm_lattice(const MonomialIdeal& ideal) {
  std::set<Exponent> out;
  std::vector<Exponent> frontier;
  for (const auto& g : ideal.generators)
    if (out.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    Exponent b = frontier.back();
    frontier.pop_back();
    for (const auto& g : ideal.generators) {
      Exponent j = lcm(b, g);
      if (out.insert(j).second) frontier.push_back(std::move(j));
    }
  }
  return {out.begin(), out.end()};
}

ResolutionReport check_resolution(const LabeledComplex& complex) {
  ResolutionReport r;
  r.ranks = complex.ranks();
  const auto& cells = complex.cells();
  const auto& gens = complex.ideal().generators;

  IndexMask zero_cells = 0;
  for (const auto& c : cells)
    if (c.dim == 0) zero_cells |= c.vertices;
  r.covers_generators = zero_cells == (gens.size() == 64 ? ~IndexMask{0} : (IndexMask{1} << gens.size()) - 1);

  r.resolution = r.covers_generators;
  for (const auto& b : lcm_lattice(complex.ideal())) {
    AcyclicityVerdict v;
    v.b = b;
    for (const auto& c : cells) v.cells += divides(c.label, b);
    v.homology = reduced_homology(complex.chain_complex(b));
    v.acyclic = v.homology.acyclic();
    r.resolution = r.resolution && v.acyclic;
    r.verdicts.push_back(std::move(v));
  }

  r.minimal = true;
  for (const auto& c : cells)
    for (const auto& [g, s] : c.boundary)
      if (cells[g].label == c.label) r.minimal = false;

  r.contains_scarf = true;
  for (IndexMask s : scarf_complex(complex.ideal())) {
    const int want = std::popcount(s) - 1;
    bool found = false;
    for (const auto& c : cells) found = found || (c.vertices == s && c.dim == want);
    if (!found) r.contains_scarf = false;
  }
  return r;
}

bool is_tropically_generic(const MonomialIdeal& ideal) {
  const auto points = tropicalize(ideal);
  if (points.size() < ideal.nvars + 1) return true;
  return is_general_position(points);
}

std::vector<LiftComparison> compare_lifts(const MonomialIdeal& ideal, std::size_t generic, std::uint64_t seed) {
  const auto points = tropicalize(ideal);
  std::vector<Lift> lifts{hull_lift(points)};
  for (std::size_t i = 0; i < generic; ++i) lifts.push_back(generic_lift(points, seed + i));
  std::vector<LiftComparison> out;
  std::vector<std::vector<IndexMask>> classes;
  for (const auto& lift : lifts) {
    const LabeledComplex lc(ideal, lift);
    const auto report = check_resolution(lc);
    LiftComparison c;
    c.label = lift.label;
    c.ranks = report.ranks;
    c.resolution = report.resolution;
    c.minimal = report.minimal;
    c.contains_scarf = report.contains_scarf;
    c.simplicial = lc.simplicial();
    const auto key = lc.key();
    const auto it = std::find(classes.begin(), classes.end(), key);
    c.class_id = static_cast<std::size_t>(it - classes.begin());
    if (it == classes.end()) classes.push_back(key);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> betti_numbers(const LabeledComplex& complex) {
  std::vector<std::size_t> betti;
  const auto& cells = complex.cells();
  for (const auto& b : lcm_lattice(complex.ideal())) {
    std::vector<bool> keep(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) keep[i] = divides(cells[i].label, b) && cells[i].label != b;
    const auto h = reduced_homology(chain_of(cells, keep));
    for (int deg = -1; deg + 1 < static_cast<int>(h.groups.size()); ++deg) {
      const auto i = static_cast<std::size_t>(deg + 1);
      if (betti.size() <= i) betti.resize(i + 1, 0);
      betti[i] += h.at(deg).free_rank;
    }
  }
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

}  // namespace tropohull
