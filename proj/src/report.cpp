#include "tropohull/report.hpp"

#include "tropohull/covector.hpp"
#include "tropohull/face_theory.hpp"
#include "tropohull/lifting.hpp"

#include <algorithm>
#include <sstream>

namespace tropohull {

using nlohmann::ordered_json;

namespace {

ordered_json point_json(const TropicalPoint& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coords()) a.push_back(c.get_str());
  return a;
}

ordered_json points_json(const std::vector<TropicalPoint>& pts) {
  ordered_json a = ordered_json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

ordered_json hyperplane_json(const TropicalHyperplane& h) {
  ordered_json a = ordered_json::array();
  for (const auto& c : h.apex()) a.push_back(c ? ordered_json(c->get_str()) : ordered_json("inf"));
  return a;
}

ordered_json sectors_json(SectorSet s) {
  ordered_json a = ordered_json::array();
  for (auto i : s.indices()) a.push_back(i + 1);
  return a;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string sector_text(SectorSet s) { return "{" + s.to_string() + "}"; }

}  // namespace

// ---------------------------------------------------------------- hull

Report hull_report(const std::vector<TropicalPoint>& points) {
  const auto complex = CellComplex::decompose(points);
  const std::size_t d = complex.dim();
  std::vector<std::size_t> all(d, 0), bounded(d, 0);
  for (const auto& c : complex.cells()) {
    ++all[static_cast<std::size_t>(c.dim)];
    if (c.bounded) ++bounded[static_cast<std::size_t>(c.dim)];
  }
  while (!bounded.empty() && bounded.back() == 0) bounded.pop_back();
  const auto pv = complex.pseudovertices();
  const auto extreme = extreme_points(points);

  Report r;
  r.data["command"] = "hull";
  r.data["d"] = d;
  r.data["points"] = points_json(points);
  ordered_json ex = ordered_json::array();
  for (auto i : extreme) ex.push_back(vertex_label(IndexMask{1} << i));
  r.data["extreme_points"] = ex;
  r.data["pseudovertices"] = points_json(pv);
  r.data["cells_by_dim"] = all;
  r.data["bounded_f_vector"] = bounded;
  r.data["interior_cells"] = complex.interior_cells().size();
  r.data["boundary_cells"] = complex.boundary_cells().size();

  std::ostringstream t;
  t << "points: " << points.size() << " in TP^" << d - 1 << "\n";
  t << "extreme points:";
  for (auto i : extreme) t << ' ' << vertex_label(IndexMask{1} << i);
  t << "\npseudovertices: " << pv.size() << "\n";
  for (const auto& p : pv) t << "  " << p.to_string() << "\n";
  t << "cells by dimension (all): " << join(all) << "\n";
  t << "bounded cells by dimension: " << join(bounded) << "\n";
  t << "interior bounded cells: " << complex.interior_cells().size()
    << ", boundary cells: " << complex.boundary_cells().size() << "\n";
  r.text = t.str();
  return r;
}

Report member_report(const std::vector<TropicalPoint>& points, const TropicalPoint& x) {
  const auto m = membership(x, points);
  Report r;
  r.data["command"] = "member";
  r.data["point"] = point_json(x);
  r.data["inside"] = m.inside;
  ordered_json c = ordered_json::array();
  for (const auto& q : m.coeffs) c.push_back(q.get_str());
  r.data["coefficients"] = c;
  r.data["cell"] = covector_of(x, points).to_string();

  std::vector<std::string> cs;
  for (const auto& q : m.coeffs) cs.push_back(q.get_str());
  r.text = x.to_string() + (m.inside ? " is inside" : " is outside") + " the tropical hull\ncoefficients: " +
           join(cs) + "\ntype: " + covector_of(x, points).to_string() + "\n";
  return r;
}

// ---------------------------------------------------------------- faces

Report faces_report(const std::vector<TropicalPoint>& points, const FacesOptions& options) {
  FaceSystem sys(points, sample_lifts(points, options.samples, options.seed));
  const auto faces = sys.all_faces();

  Report r;
  std::ostringstream t;
  r.data["command"] = "faces";
  r.data["seed"] = options.seed;
  r.data["generic_lifts"] = options.samples;

  ordered_json lifts = ordered_json::array();
  t << "sampled lifts: " << sys.lifts().size() << "\n";
  const auto boundary = sys.boundary();
  for (std::size_t l = 0; l < sys.lifts().size(); ++l) {
    const auto& a = sys.lifts()[l];
    auto image = a.boundary_image();
    std::sort(image.begin(), image.end());
    auto sorted_boundary = boundary;
    std::sort(sorted_boundary.begin(), sorted_boundary.end());
    ordered_json row;
    row["label"] = a.lift().label;
    row["kind"] = to_string(a.lift().kind);
    row["dim"] = a.dim();
    row["facets"] = a.facets().size();
    row["simplicial"] = a.simplicial();
    row["boundary_matches"] = image == sorted_boundary;
    std::vector<bool> split;
    for (int k = 0; k < sys.dim(); ++k) split.push_back(sys.partition(k, l).has_value());
    row["fatom_partition"] = split;
    lifts.push_back(row);
    t << "  " << a.lift().label << ": " << a.facets().size() << " facets" << (a.simplicial() ? ", simplicial" : "")
      << (image == sorted_boundary ? "" : ", boundary image differs") << "\n";
  }
  r.data["lifts"] = lifts;

  std::vector<std::size_t> fv;
  for (const auto& fk : faces) fv.push_back(fk.size());
  r.data["f_vector"] = fv;
  t << "f-vector: (" << join(fv, ",") << ")\n";

  ordered_json out = ordered_json::array();
  for (int k = 0; k < static_cast<int>(faces.size()); ++k) {
    if (options.k && *options.k != k) continue;
    t << k << "-faces:\n";
    for (const auto& f : faces[static_cast<std::size_t>(k)]) {
      ordered_json e;
      e["k"] = k;
      e["vertices"] = vertex_label(f.vertices);
      e["cells"] = f.cells.size();
      e["connected"] = sys.connected(f);
      t << "  " << vertex_label(f.vertices) << " (" << f.cells.size() << " cells)";
      if (k == sys.dim() - 1) {
        const auto dir = sys.direction(f);
        e["direction"] = {{"positive", sectors_json(dir.positive)},
                          {"negative", sectors_json(dir.negative)},
                          {"complete", dir.complete()}};
        t << " direction R=" << sector_text(dir.positive) << " S=" << sector_text(dir.negative)
          << (dir.complete() ? "" : " (not cut out in every lift)");
      }
      t << "\n";
      out.push_back(e);
    }
  }
  r.data["faces"] = out;
  r.text = t.str();
  return r;
}

// ---------------------------------------------------------------- J-facets

namespace {

// A maximal chain from the bottom to the top along covers, longest or shortest.
std::vector<std::size_t> extremal_chain(const JFaceLattice& lat, bool longest) {
  const auto& len = longest ? lat.longest : lat.shortest;
  std::vector<std::size_t> chain{lat.elements.size() - 1};
  while (chain.back() != 0) {
    const std::size_t cur = chain.back();
    for (std::size_t p = 0; p < lat.elements.size(); ++p) {
      const auto& c = lat.covers[p];
      if (len[p] + 1 == len[cur] && std::find(c.begin(), c.end(), cur) != c.end()) {
        chain.push_back(p);
        break;
      }
    }
    if (chain.back() == cur) break;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::string element_label(IndexMask m) { return m == 0 ? "{}" : vertex_label(m); }

}  // namespace

Report jfacets_report(const std::vector<TropicalPoint>& points) {
  const auto facets = j_facets(points);
  const auto lat = j_face_lattice(points, facets);

  Report r;
  std::ostringstream t;
  r.data["command"] = "jfacets";
  ordered_json fs = ordered_json::array();
  t << "J-facets: " << facets.size() << "\n";
  for (const auto& f : facets) {
    ordered_json e;
    e["vertices"] = vertex_label(f.vertices);
    e["apex"] = hyperplane_json(f.witness().hyperplane());
    e["sectors"] = sectors_json(f.witness().sectors());
    ordered_json ws = ordered_json::array();
    for (const auto& w : f.witnesses) ws.push_back({{"apex", hyperplane_json(w.hyperplane())}, {"sectors", sectors_json(w.sectors())}});
    e["witnesses"] = ws;
    fs.push_back(e);
    t << "  " << vertex_label(f.vertices) << " at " << f.witness().hyperplane().to_string() << " sectors "
      << sector_text(f.witness().sectors());
    if (f.witnesses.size() > 1) t << " (" << f.witnesses.size() << " witnesses)";
    t << "\n";
  }
  r.data["facets"] = fs;

  ordered_json l;
  l["elements"] = lat.elements.size();
  l["graded"] = lat.graded();
  l["height"] = lat.height();
  l["rank_sizes"] = lat.rank_sizes();
  auto chain_json = [&](const std::vector<std::size_t>& c) {
    ordered_json a = ordered_json::array();
    for (auto i : c) a.push_back(element_label(lat.elements[i]));
    return a;
  };
  auto chain_text = [&](const std::vector<std::size_t>& c) {
    std::vector<std::string> s;
    for (auto i : c) s.push_back(element_label(lat.elements[i]));
    return join(s, " < ");
  };
  const auto lo = extremal_chain(lat, true), sh = extremal_chain(lat, false);
  l["longest_chain"] = chain_json(lo);
  l["shortest_chain"] = chain_json(sh);
  r.data["lattice"] = l;

  t << "intersection lattice: " << lat.elements.size() << " elements, height " << lat.height() << ", "
    << (lat.graded() ? "graded" : "not graded") << "\n";
  if (lat.graded()) {
    t << "  rank sizes: " << join(lat.rank_sizes()) << "\n";
  } else {
    t << "  longest maximal chain:  " << chain_text(lo) << "\n";
    t << "  shortest maximal chain: " << chain_text(sh) << "\n";
  }
  r.text = t.str();
  return r;
}

// ---------------------------------------------------------------- resolve

namespace {

ordered_json complex_json(const LabeledComplex& lc, const ResolutionReport& rep) {
  ordered_json c;
  c["ranks"] = rep.ranks;
  c["resolution"] = rep.resolution;
  c["minimal"] = rep.minimal;
  c["contains_scarf"] = rep.contains_scarf;
  c["covers_generators"] = rep.covers_generators;
  c["simplicial"] = lc.simplicial();
  c["bounded_iff_positive_on_rays"] = lc.bounded_iff_positive_on_rays();
  c["multidegrees_tested"] = rep.verdicts.size();
  ordered_json failed = ordered_json::array();
  for (const auto& v : rep.verdicts)
    if (!v.acyclic) failed.push_back({{"b", monomial_string(v.b)}, {"homology", v.homology.to_string()}});
  c["failed_multidegrees"] = failed;
  ordered_json cells = ordered_json::array();
  for (const auto& cell : lc.cells()) {
    ordered_json e;
    e["dim"] = cell.dim;
    e["vertices"] = vertex_label(cell.vertices);
    e["label"] = monomial_string(cell.label);
    ordered_json b = ordered_json::array();
    for (const auto& [g, s] : cell.boundary) b.push_back({g, s});
    e["boundary"] = b;
    cells.push_back(e);
  }
  c["cells"] = cells;
  return c;
}

void complex_text(std::ostringstream& t, const std::string& label, const LabeledComplex& lc,
                  const ResolutionReport& rep) {
  t << label << ": ranks (" << join(rep.ranks, ",") << ")" << (rep.resolution ? ", resolution" : ", NOT a resolution")
    << (rep.minimal ? ", minimal" : ", not minimal") << (rep.contains_scarf ? ", contains Scarf" : ", misses Scarf")
    << (lc.simplicial() ? ", simplicial" : "") << "\n";
  t << "  " << rep.verdicts.size() << " multidegrees tested";
  std::size_t bad = 0;
  for (const auto& v : rep.verdicts) bad += !v.acyclic;
  t << (bad ? ", " + std::to_string(bad) + " not acyclic" : ", all acyclic") << "\n";
  for (int k = 0; k <= lc.dim(); ++k) {
    t << "  " << k << "-cells:";
    for (auto i : lc.cells_of_dim(k))
      t << ' ' << vertex_label(lc.cells()[i].vertices) << '[' << monomial_string(lc.cells()[i].label) << ']';
    t << "\n";
  }
}

}  // namespace

Report resolve_report(const MonomialIdeal& ideal, const std::vector<std::string>& warnings,
                      const ResolveOptions& options) {
  Report r;
  std::ostringstream t;
  r.data["command"] = "resolve";
  ordered_json gens = ordered_json::array();
  std::vector<std::string> gtext;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    gens.push_back(monomial_string(ideal.generators[i]));
    gtext.push_back(vertex_label(IndexMask{1} << i) + "=" + monomial_string(ideal.generators[i]));
  }
  r.data["generators"] = gens;
  r.data["warnings"] = warnings;
  for (const auto& w : warnings) t << "warning: " << w << "\n";
  t << "generators: " << join(gtext) << "\n";

  const bool generic_ideal = is_tropically_generic(ideal);
  r.data["tropically_generic"] = generic_ideal;
  t << "tropically generic: " << (generic_ideal ? "yes" : "no") << "\n";
  if (ideal.generators.size() <= 20) {
    ordered_json sc = ordered_json::array();
    std::vector<std::string> st;
    for (auto s : scarf_complex(ideal)) {
      sc.push_back(vertex_label(s));
      st.push_back(vertex_label(s));
    }
    r.data["scarf"] = sc;
    t << "Scarf faces: " << join(st) << "\n";
  }

  const auto points = tropicalize(ideal);
  const Lift lift = options.generic ? generic_lift(points, options.seed) : hull_lift(points);
  const LabeledComplex lc(ideal, lift);
  const auto rep = check_resolution(lc);
  r.data["lift"] = lift.label;
  r.data["complex"] = complex_json(lc, rep);
  complex_text(t, lift.label, lc, rep);

  const auto betti = betti_numbers(lc);
  r.data["betti_numbers"] = betti;
  t << "Betti numbers: (" << join(betti, ",") << ")\n";

  if (options.compare > 0) {
    const auto table = compare_lifts(ideal, options.compare, options.seed);
    ordered_json rows = ordered_json::array();
    std::size_t classes = 0;
    t << "comparison:\n";
    for (const auto& c : table) {
      classes = std::max(classes, c.class_id + 1);
      rows.push_back({{"lift", c.label},
                      {"ranks", c.ranks},
                      {"resolution", c.resolution},
                      {"minimal", c.minimal},
                      {"contains_scarf", c.contains_scarf},
                      {"simplicial", c.simplicial},
                      {"class", c.class_id}});
      t << "  " << c.label << ": ranks (" << join(c.ranks, ",") << ")" << (c.resolution ? " resolution" : " FAILED")
        << (c.minimal ? " minimal" : "") << (c.simplicial ? " simplicial" : "") << " class " << c.class_id << "\n";
    }
    r.data["comparison"] = rows;
    r.data["distinct_complexes"] = classes;
    t << "distinct labeled complexes: " << classes << "\n";
  }
  r.text = t.str();
  return r;
}

}  // namespace tropohull
