#include "tropohull/face_theory.hpp"

#include "tropohull/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tropohull {

namespace {

using CellSet = std::vector<std::size_t>;

CellSet set_union(const CellSet& a, const CellSet& b) {
  CellSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const CellSet& big, const CellSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool contains_cell(const CellSet& s, std::size_t c) { return std::binary_search(s.begin(), s.end(), c); }

IndexMask vertex_mask(const std::vector<TropicalPoint>& points) { return mask_of(extreme_points(points)); }

}  // namespace

// ---------------------------------------------------------------- J-facets

std::vector<JFacet> j_facets(const std::vector<TropicalPoint>& points) {
  if (points.empty()) return {};
  const std::size_t d = points[0].dim();
  const IndexMask verts = vertex_mask(points);
  const auto apices = CellComplex::decompose(points).pseudovertices();
  std::map<IndexMask, std::vector<TropicalHalfspace>> found;
  const std::uint32_t full = SectorSet::full(d).bits();
  for (const auto& apex : apices) {
    const TropicalHyperplane h(apex);
    for (std::uint32_t bits = 1; bits < full; ++bits) {
      TropicalHalfspace hs(h, SectorSet(bits));
      IndexMask on = 0;
      bool inside = true;
      for (std::size_t i = 0; i < points.size() && inside; ++i) {
        const Position pos = halfspace_position(points[i], hs);
        if (pos == Position::outside) inside = false;
        if (pos == Position::boundary && (verts >> i & 1u)) on |= IndexMask{1} << i;
      }
      if (!inside || on == 0 || on == verts) continue;
      found[on].push_back(hs);
    }
  }
  std::vector<JFacet> out;
  for (const auto& [mask, witnesses] : found) {
    const bool maximal = std::none_of(found.begin(), found.end(), [&](const auto& other) {
      return other.first != mask && mask_includes(other.first, mask);
    });
    if (maximal) out.push_back({mask, witnesses});
  }
  return out;
}

std::optional<std::size_t> JFaceLattice::find(IndexMask m) const {
  auto it = std::find(elements.begin(), elements.end(), m);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<std::size_t> JFaceLattice::rank_sizes() const {
  if (!graded()) return {};
  std::vector<std::size_t> sizes(static_cast<std::size_t>(std::max(height() - 1, 0)), 0);
  for (std::size_t i = 1; i + 1 < elements.size(); ++i) ++sizes[static_cast<std::size_t>(longest[i] - 1)];
  return sizes;
}

JFaceLattice j_face_lattice(const std::vector<TropicalPoint>& points, const std::vector<JFacet>& facets) {
  std::set<IndexMask> sets{0, vertex_mask(points)};
  std::vector<IndexMask> frontier;
  for (const auto& f : facets)
    if (sets.insert(f.vertices).second) frontier.push_back(f.vertices);
  while (!frontier.empty()) {
    IndexMask m = frontier.back();
    frontier.pop_back();
    for (const auto& f : facets)
      if (sets.insert(m & f.vertices).second) frontier.push_back(m & f.vertices);
  }
  JFaceLattice lat;
  lat.elements.assign(sets.begin(), sets.end());
  std::stable_sort(lat.elements.begin(), lat.elements.end(),
                   [](IndexMask a, IndexMask b) { return std::popcount(a) < std::popcount(b); });
  // The top may have fewer vertices than a facet only if it is a facet itself,
  // so ordering by size keeps it last.
  const std::size_t n = lat.elements.size();
  auto below = [&](std::size_t a, std::size_t b) {
    return a != b && mask_includes(lat.elements[b], lat.elements[a]);
  };
  lat.covers.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!below(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (below(a, c) && below(c, b)) direct = false;
      if (direct) lat.covers[a].push_back(b);
    }
  lat.shortest.assign(n, 0);
  lat.longest.assign(n, 0);
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : lat.covers[a]) {
      if (!reached[b]) {
        lat.shortest[b] = lat.shortest[a] + 1;
        lat.longest[b] = lat.longest[a] + 1;
        reached[b] = true;
      } else {
        lat.shortest[b] = std::min(lat.shortest[b], lat.shortest[a] + 1);
        lat.longest[b] = std::max(lat.longest[b], lat.longest[a] + 1);
      }
    }
  return lat;
}

namespace {

bool realizes(const ConeHull<PuiseuxNumber>& hull, IndexMask target, IndexMask verts) {
  return std::any_of(hull.facets().begin(), hull.facets().end(),
                     [&](const ConeFacet<PuiseuxNumber>& f) { return (f.incident & verts) == target; });
}

std::vector<std::vector<std::size_t>> subsets_of_size(const std::vector<std::size_t>& items, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      cur.push_back(items[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::optional<Lift> j_facet_lift(const std::vector<TropicalPoint>& points, const JFacet& facet) {
  const Lift hull = hull_lift(points);
  const IndexMask verts = vertex_mask(points);
  if (realizes(ConeHull<PuiseuxNumber>(hull.vectors), facet.vertices, verts)) return hull;
  const auto pivots = linalg::pivot_columns(hull.vectors);
  const std::size_t r = pivots.size();
  if (r < 2) return std::nullopt;
  const auto members = mask_indices(facet.vertices);
  for (const auto& basis : subsets_of_size(members, r - 1)) {
    std::vector<KVector> rows;
    for (auto i : basis) rows.push_back(linalg::project(hull.vectors[i], pivots));
    if (linalg::rank(rows) != r - 1) continue;
    const KVector normal = linalg::cross_minors(rows);
    std::vector<KVector> vectors = hull.vectors;
    bool moved_all = true;
    for (auto w : members) {
      if (std::find(basis.begin(), basis.end(), w) != basis.end()) continue;
      const PuiseuxNumber residue = linalg::dot(normal, linalg::project(vectors[w], pivots));
      if (residue.is_zero()) continue;
      bool moved = false;
      for (std::size_t j = 0; j < r && !moved; ++j) {
        if (normal[j].is_zero()) continue;
        const std::size_t coord = pivots[j];
        PuiseuxNumber value = vectors[w][coord] - residue / normal[j];
        if (value.sign() <= 0 || value.degree() != vectors[w][coord].degree()) continue;
        vectors[w][coord] = std::move(value);
        moved = true;
      }
      if (!moved) moved_all = false;
    }
    if (!moved_all) continue;
    if (!realizes(ConeHull<PuiseuxNumber>(vectors), facet.vertices, verts)) continue;
    return explicit_lift(points, std::move(vectors), "J-facet " + vertex_label(facet.vertices));
  }
  return std::nullopt;
}

std::vector<Lift> sample_lifts(const std::vector<TropicalPoint>& points, std::size_t generic, std::uint64_t seed,
                               bool with_j_facet_lifts) {
  std::vector<Lift> lifts{hull_lift(points)};
  for (std::size_t i = 0; i < generic; ++i) lifts.push_back(generic_lift(points, seed + i));
  if (with_j_facet_lifts)
    for (const auto& jf : j_facets(points)) {
      auto lift = j_facet_lift(points, jf);
      if (lift && lift->kind == LiftKind::explicit_) lifts.push_back(std::move(*lift));
    }
  return lifts;
}

// ---------------------------------------------------------------- FaceSystem

FaceSystem::FaceSystem(std::vector<TropicalPoint> points, std::vector<Lift> lifts)
    : complex_(CellComplex::decompose(std::move(points))) {
  if (lifts.empty()) throw DomainError("face computations need at least one lift");
  for (auto& l : lifts) {
    if (l.source != complex_.points()) throw DomainError("lift of a different configuration");
    lifts_.emplace_back(std::move(l), complex_);
    dim_ = std::max(dim_, lifts_.back().dim());
  }
  boundary_ = complex_.boundary_cells();
}

std::vector<std::size_t> FaceSystem::boundary_cells(int k) const {
  std::vector<std::size_t> out;
  for (auto c : boundary_)
    if (complex_.cell(c).dim == k) out.push_back(c);
  return out;
}

std::vector<std::size_t> FaceSystem::fatom_faces(std::size_t l, int k) const {
  std::vector<std::size_t> out;
  const auto& faces = lifts_.at(l).faces();
  for (auto i : lifts_[l].fatoms(k)) {
    CellSet top;
    for (auto c : faces[i].cells)
      if (complex_.cell(c).dim == k) top.push_back(c);
    if (!top.empty() && includes(boundary_, top)) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> FaceSystem::fatom_images(std::size_t l, int k) const {
  std::vector<CellSet> out;
  for (auto i : fatom_faces(l, k)) {
    CellSet top;
    for (auto c : lifts_[l].faces()[i].cells)
      if (complex_.cell(c).dim == k) top.push_back(c);
    out.push_back(std::move(top));
  }
  return out;
}

std::vector<Face> FaceSystem::faces(int k, const FaceSearchOptions& options) const {
  if (auto it = face_cache_.find(k); it != face_cache_.end()) return it->second;
  const std::size_t n = lifts_.size();
  std::vector<std::vector<CellSet>> atoms(n);
  for (std::size_t l = 0; l < n; ++l) atoms[l] = fatom_images(l, k);

  std::set<CellSet> visited;
  std::vector<CellSet> found;
  // Grows s until every lift expresses it; each uncovered cell forces one of
  // the inclusion-minimal fatoms through it.
  std::function<void(const CellSet&, std::size_t)> grow = [&](const CellSet& s, std::size_t depth) {
    if (!visited.insert(s).second) return;
    for (const auto& f : found)
      if (includes(s, f)) return;
    for (std::size_t l = 0; l < n; ++l) {
      CellSet covered;
      for (const auto& a : atoms[l])
        if (includes(s, a)) covered = set_union(covered, a);
      auto gap = std::find_if(s.begin(), s.end(), [&](std::size_t c) { return !contains_cell(covered, c); });
      if (gap == s.end()) continue;
      std::vector<const CellSet*> options_here;
      for (const auto& a : atoms[l])
        if (contains_cell(a, *gap)) options_here.push_back(&a);
      std::vector<const CellSet*> minimal;
      for (auto* a : options_here) {
        const bool is_min = std::none_of(options_here.begin(), options_here.end(),
                                         [&](const CellSet* b) { return b != a && *b != *a && includes(*a, *b); });
        if (is_min && std::none_of(minimal.begin(), minimal.end(), [&](const CellSet* b) { return *b == *a; }))
          minimal.push_back(a);
      }
      if (minimal.empty()) return;
      const std::size_t next = depth + (minimal.size() > 1 ? 1 : 0);
      if (next > options.max_branch_depth)
        throw BudgetExceeded("faces: branch depth " + std::to_string(options.max_branch_depth) + " exceeded");
      for (auto* a : minimal) grow(set_union(s, *a), next);
      return;
    }
    found.push_back(s);
  };
  for (auto seed : boundary_cells(k)) grow(CellSet{seed}, 0);

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Face> out;
  for (const auto& s : found) {
    const bool minimal =
        std::none_of(found.begin(), found.end(), [&](const CellSet& o) { return o != s && includes(s, o); });
    if (!minimal) continue;
    Face f;
    f.k = k;
    f.cells = s;
    // Vertices common to the lifted faces in every lift.
    f.vertices = vertex_mask(points());
    for (std::size_t l = 0; l < n; ++l) {
      IndexMask here = 0;
      for (auto i : fatoms_inside(f, l)) here |= lifts_[l].faces()[i].generators;
      f.vertices &= here;
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.cells < b.cells;
  });
  face_cache_[k] = out;
  return out;
}

std::vector<std::vector<Face>> FaceSystem::all_faces(const FaceSearchOptions& options) const {
  std::vector<std::vector<Face>> out;
  for (int k = 0; k < dim_; ++k) out.push_back(faces(k, options));
  return out;
}

std::vector<std::size_t> FaceSystem::closure(const std::vector<std::size_t>& cells) const {
  CellSet out;
  for (std::size_t a = 0; a < complex_.size(); ++a)
    for (auto c : cells)
      if (complex_.is_face(a, c)) {
        out.push_back(a);
        break;
      }
  return out;
}

bool FaceSystem::contains(const std::vector<std::size_t>& closed_cells, const TropicalPoint& x) const {
  return contains_cell(closed_cells, complex_.locate(x));
}

std::vector<std::size_t> FaceSystem::fatoms_inside(const Face& f, std::size_t lift) const {
  std::vector<std::size_t> out;
  const auto ids = fatom_faces(lift, f.k);
  const auto images = fatom_images(lift, f.k);
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (includes(f.cells, images[i])) out.push_back(ids[i]);
  return out;
}

std::optional<std::vector<std::vector<std::size_t>>> FaceSystem::partition(int k, std::size_t lift) const {
  const auto key = std::make_pair(k, lift);
  if (auto it = partition_cache_.find(key); it != partition_cache_.end()) return it->second;
  const auto& fs = faces(k);
  const auto ids = fatom_faces(lift, k);
  const auto images = fatom_images(lift, k);
  std::vector<std::vector<std::size_t>> candidates(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (includes(fs[j].cells, images[i])) candidates[i].push_back(j);
  // Fatoms inside no face stay unassigned.
  std::vector<std::size_t> choice(ids.size(), 0);
  std::optional<std::vector<std::vector<std::size_t>>> result;
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == ids.size()) {
      std::vector<CellSet> covered(fs.size());
      std::vector<std::vector<std::size_t>> share(fs.size());
      for (std::size_t a = 0; a < ids.size(); ++a) {
        if (candidates[a].empty()) continue;
        const std::size_t j = candidates[a][choice[a]];
        covered[j] = set_union(covered[j], images[a]);
        share[j].push_back(ids[a]);
      }
      for (std::size_t j = 0; j < fs.size(); ++j)
        if (covered[j] != fs[j].cells) return false;
      result = std::move(share);
      return true;
    }
    if (candidates[i].empty()) return assign(i + 1);
    for (choice[i] = 0; choice[i] < candidates[i].size(); ++choice[i])
      if (assign(i + 1)) return true;
    return false;
  };
  assign(0);
  partition_cache_[key] = result;
  return result;
}

std::vector<std::size_t> FaceSystem::lifted_faces(const Face& f, std::size_t lift) const {
  const auto split = partition(f.k, lift);
  if (!split) return fatoms_inside(f, lift);
  const auto& fs = faces(f.k);
  for (std::size_t j = 0; j < fs.size(); ++j)
    if (fs[j] == f) return (*split)[j];
  return fatoms_inside(f, lift);
}

std::vector<std::size_t> FaceSystem::image(const Face& f, std::size_t lift) const {
  const auto& faces = lifts_.at(lift).faces();
  CellSet out;
  for (auto a : lifted_faces(f, lift)) out = set_union(out, faces[a].cells);
  return out;
}

std::vector<std::size_t> FaceSystem::intersection(const Face& f, const Face& g, std::size_t lift) const {
  const auto& faces = lifts_.at(lift).faces();
  const auto& source = lifts_[lift].lift().source;
  std::set<IndexMask> meets;
  for (auto a : lifted_faces(f, lift))
    for (auto b : lifted_faces(g, lift)) meets.insert(faces[a].generators & faces[b].generators);
  CellSet out;
  for (IndexMask m : meets) {
    if (m == 0) continue;
    std::vector<TropicalPoint> w;
    for (auto i : mask_indices(m)) w.push_back(source[i]);
    out = set_union(out, image_cells(complex_, w));
  }
  return out;
}

namespace {

void record_signs(const KVector& normal, SectorSet& pos, SectorSet& neg, bool first) {
  SectorSet p, n;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    const int s = normal[i].sign();
    if (s > 0) p.insert(i);
    if (s < 0) n.insert(i);
  }
  pos = first ? p : (pos & p);
  neg = first ? n : (neg & n);
}

Direction assemble(const std::vector<std::vector<const KVector*>>& per_lift) {
  Direction d;
  bool first_overall = true;
  for (std::size_t l = 0; l < per_lift.size(); ++l) {
    if (per_lift[l].empty()) {
      d.missing.push_back(l);
      continue;
    }
    Direction::PerLift entry;
    entry.lift = l;
    bool first = true;
    for (const KVector* f : per_lift[l]) {
      record_signs(*f, entry.positive, entry.negative, first);
      record_signs(*f, d.positive, d.negative, first_overall);
      first = first_overall = false;
    }
    d.per_lift.push_back(entry);
  }
  return d;
}

}  // namespace

Direction FaceSystem::direction(const Face& f) const {
  std::vector<std::vector<const KVector*>> functionals(lifts_.size());
  for (std::size_t l = 0; l < lifts_.size(); ++l) {
    const auto& faces = lifts_[l].faces();
    for (auto i : lifted_faces(f, l))
      if (faces[i].normal) functionals[l].push_back(&*faces[i].normal);
  }
  return assemble(functionals);
}

Direction FaceSystem::direction(IndexMask generators) const {
  std::vector<std::vector<const KVector*>> functionals(lifts_.size());
  for (std::size_t l = 0; l < lifts_.size(); ++l)
    for (auto i : lifts_[l].facets()) {
      const auto& face = lifts_[l].faces()[i];
      if (face.generators == generators && face.normal) functionals[l].push_back(&*face.normal);
    }
  return assemble(functionals);
}

std::vector<std::size_t> FaceSystem::segment_cells(const TropicalPoint& p, const TropicalPoint& q) const {
  const auto breaks = tropical_segment(p, q);
  const std::size_t d = p.dim();
  std::set<std::size_t> cells;
  auto at = [&](const TropicalPoint& a, const TropicalPoint& b, const Rational& s) {
    RationalVector x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = a[j] + s * (b[j] - a[j]);
    cells.insert(complex_.locate(TropicalPoint(std::move(x))));
  };
  if (breaks.size() == 1) at(breaks[0], breaks[0], 0);
  for (std::size_t piece = 0; piece + 1 < breaks.size(); ++piece) {
    const TropicalPoint& a = breaks[piece];
    const TropicalPoint& b = breaks[piece + 1];
    // The type changes only where some v_ij - x_j = v_il - x_l.
    std::set<Rational> params{Rational(0), Rational(1)};
    for (const auto& v : points())
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = j + 1; l < d; ++l) {
          const Rational slope = (b[j] - a[j]) - (b[l] - a[l]);
          if (slope == 0) continue;
          const Rational s = (v[j] - v[l] - a[j] + a[l]) / slope;
          if (s > 0 && s < 1) params.insert(s);
        }
    std::vector<Rational> ps(params.begin(), params.end());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      at(a, b, ps[i]);
      if (i + 1 < ps.size()) at(a, b, (ps[i] + ps[i + 1]) / 2);
    }
  }
  return CellSet(cells.begin(), cells.end());
}

bool FaceSystem::connected(const Face& f) const {
  if (f.cells.empty()) return false;
  std::vector<bool> seen(f.cells.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < f.cells.size(); ++b)
      if (!seen[b] && adjacent(f.cells[a], f.cells[b])) {
        seen[b] = true;
        stack.push_back(b);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

Poset FaceSystem::j_derived_poset(const std::vector<JFacet>& facets, std::vector<IndexMask>* labels) const {
  const IndexMask verts = vertex_mask(points());
  // Each J-facet contributes its own proper faces; a J-facet lies above exactly
  // those, lower cells are ordered by vertex inclusion.
  std::vector<std::set<IndexMask>> own(facets.size());
  std::set<IndexMask> lower;
  for (std::size_t j = 0; j < facets.size(); ++j) {
    bool realized = false;
    for (std::size_t l = 0; l < lifts_.size() && !realized; ++l) {
      const auto& faces = lifts_[l].faces();
      for (auto i : lifts_[l].facets()) {
        if ((faces[i].generators & verts) != facets[j].vertices) continue;
        for (const auto& sub : faces)
          if (sub.dim >= 0 && sub.dim + 1 < lifts_[l].dim() && mask_includes(faces[i].generators, sub.generators) &&
              (sub.generators & verts) != 0)
            own[j].insert(sub.generators & verts);
        realized = true;
        break;
      }
    }
    if (!realized)
      throw DomainError("J-facet " + vertex_label(facets[j].vertices) + " is not a facet of any sampled lift");
    lower.insert(own[j].begin(), own[j].end());
  }
  std::vector<IndexMask> list(lower.begin(), lower.end());
  std::stable_sort(list.begin(), list.end(), [](IndexMask a, IndexMask b) { return std::popcount(a) < std::popcount(b); });
  const std::size_t n_lower = list.size();
  for (const auto& jf : facets) list.push_back(jf.vertices);
  Poset p;
  p.less.assign(list.size(), std::vector<bool>(list.size(), false));
  for (std::size_t a = 0; a < n_lower; ++a) {
    for (std::size_t b = 0; b < n_lower; ++b) p.less[a][b] = a != b && mask_includes(list[b], list[a]);
    for (std::size_t j = 0; j < facets.size(); ++j) p.less[a][n_lower + j] = own[j].count(list[a]) > 0;
  }
  if (labels) *labels = list;
  return p;
}

Poset FaceSystem::face_poset(const std::vector<std::vector<Face>>& faces) const {
  std::vector<const Face*> flat;
  for (const auto& level : faces)
    for (const auto& f : level) flat.push_back(&f);
  // lifted[l][i]: generator sets of the lifted faces of flat[i] in lift l.
  std::vector<std::vector<std::vector<IndexMask>>> lifted(lifts_.size());
  for (std::size_t l = 0; l < lifts_.size(); ++l)
    for (auto* f : flat) {
      std::vector<IndexMask> gens;
      for (auto i : lifted_faces(*f, l)) gens.push_back(lifts_[l].faces()[i].generators);
      lifted[l].push_back(std::move(gens));
    }
  // G < F when, in every lift, each lifted face of G is a face of a lifted face of F.
  auto below = [&](std::size_t g, std::size_t f) {
    if (flat[g]->k >= flat[f]->k) return false;
    for (std::size_t l = 0; l < lifts_.size(); ++l)
      for (IndexMask a : lifted[l][g])
        if (std::none_of(lifted[l][f].begin(), lifted[l][f].end(), [&](IndexMask b) { return mask_includes(b, a); }))
          return false;
    return true;
  };
  Poset p;
  p.less.assign(flat.size(), std::vector<bool>(flat.size(), false));
  for (std::size_t a = 0; a < flat.size(); ++a)
    for (std::size_t b = 0; b < flat.size(); ++b) p.less[a][b] = below(a, b);
  return p;
}

// ---------------------------------------------------------------- sign vectors

std::vector<std::vector<int>> combination_sign_vectors(const KVector& f, const KVector& g) {
  if (f.size() != g.size()) throw DimensionError("functionals of different length");
  // f + u g changes sign in coordinate i at u = -f_i / g_i when that is positive.
  std::vector<PuiseuxNumber> breaks;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].sign() * g[i].sign() < 0) breaks.push_back(-f[i] / g[i]);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<PuiseuxNumber> samples;
  if (breaks.empty()) {
    samples.push_back(1);
  } else {
    samples.push_back(breaks.front() / PuiseuxNumber(2));
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      samples.push_back(breaks[i]);
      if (i + 1 < breaks.size()) samples.push_back((breaks[i] + breaks[i + 1]) / PuiseuxNumber(2));
    }
    samples.push_back(breaks.back() * PuiseuxNumber(2));
  }
  std::set<std::vector<int>> out;
  for (const auto& u : samples) {
    std::vector<int> s;
    for (std::size_t i = 0; i < f.size(); ++i) s.push_back((f[i] + u * g[i]).sign());
    if (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; }))
      throw DomainError("edge_sign_vectors: the functionals are negatively proportional");
    out.insert(std::move(s));
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> edge_sign_vectors(const LiftAnalysis& lift, IndexMask face_generators) {
  std::vector<const KVector*> normals;
  for (auto i : lift.facets()) {
    const auto& face = lift.faces()[i];
    if (mask_includes(face.generators, face_generators) && face.normal) normals.push_back(&*face.normal);
  }
  if (normals.size() != 2)
    throw DomainError("edge_sign_vectors: face " + vertex_label(face_generators) + " lies in " +
                      std::to_string(normals.size()) + " facets, expected 2");
  return combination_sign_vectors(*normals[0], *normals[1]);
}

std::string sign_string(const std::vector<int>& s) {
  std::string out = "(";
  for (int x : s) out += x > 0 ? '+' : (x < 0 ? '-' : '0');
  return out + ")";
}

std::string vertex_label(IndexMask m) {
  std::string out;
  for (auto i : mask_indices(m)) {
    if (i < 26) {
      out += static_cast<char>('A' + i);
    } else {
      out += "[" + std::to_string(i) + "]";
    }
  }
  return out;
}

}  // namespace tropohull
