// One PASS/FAIL line per acceptance criterion, followed by indented details.
// Exit status is 0 only when every criterion passes.

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include "tropohull/errors.hpp"
#include "tropohull/face_theory.hpp"
#include "tropohull/report.hpp"
#include "tropohull/resolution.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace tropohull;
using fixtures::pt;
using fixtures::pts;
using K = PuiseuxNumber;
using json = nlohmann::ordered_json;

namespace {

// Pinned limits, seconds.
constexpr double kTriangleSeconds = 1;
constexpr double kModelSeconds = 30;
constexpr double kHullLiftSeconds = 10;
constexpr double kResolutionSeconds = 60;

constexpr std::size_t kSamples = 5;  // generic lifts per configuration
constexpr std::uint64_t kSeed = 1;
constexpr int kPropertyCases = 200;
constexpr int kExtremePairs = 200;

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    pass_ = pass_ && ok;
    lines_.push_back((ok ? "ok        " : "mismatch  ") + what);
  }
  void note(const std::string& what) { lines_.push_back("          " + what); }
  bool pass() const { return pass_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool pass_ = true;
  std::vector<std::string> lines_;
};

struct Context {
  std::filesystem::path artifacts;
  json counterexamples = json::array();
};

IndexMask mask(const std::string& letters) {
  IndexMask m = 0;
  for (char c : letters) m |= IndexMask{1} << (c - 'A');
  return m;
}

std::string labels_text(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : " ") + x;
  return "{" + out + "}";
}

template <class Items>
std::set<std::string> labels(const Items& items) {
  std::set<std::string> out;
  for (const auto& f : items) out.insert(vertex_label(f.vertices));
  return out;
}

std::string sectors_text(SectorSet s) {
  std::string out;
  for (auto i : s.indices()) out += std::to_string(i + 1);
  return "{" + out + "}";
}

// Finite apex in the chart x0 = 0, or nullopt.
std::optional<TropicalPoint> finite_apex(const TropicalHalfspace& h) {
  std::vector<Rational> a;
  for (const auto& c : h.hyperplane().apex()) {
    if (!c) return std::nullopt;
    a.push_back(*c);
  }
  return canonicalize(a);
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> signs(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c == '+' ? 1 : c == '-' ? -1 : 0);
  return out;
}

bool proportional(const KVector& a, const KVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return true;
}

std::vector<std::size_t> f_vector(const std::vector<std::vector<Face>>& faces) {
  std::vector<std::size_t> out;
  for (const auto& fk : faces) out.push_back(fk.size());
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "(" + out + ")";
}

const Face* face_with(const std::vector<Face>& faces, const std::string& letters) {
  for (const auto& f : faces)
    if (f.vertices == mask(letters)) return &f;
  return nullptr;
}

TropicalPoint sample_point(std::mt19937_64& rng, const std::vector<TropicalPoint>& v) {
  std::vector<Rational> c(v.size());
  for (auto& x : c) x = gen::rational(rng, 4, 4);
  return tconv_combination(c, v);
}

// ---------------------------------------------------------------- 1

void triangle(Criterion& c, Context&) {
  const auto tri = fixtures::triangle();
  const auto report = jfacets_report(tri);
  c.expect(report.data["facets"].size() == 3, "jfacets reports " + std::to_string(report.data["facets"].size()) + " J-facets");

  const auto facets = j_facets(tri);
  std::set<std::pair<TropicalPoint, SectorSet>> got;
  std::vector<TropicalHalfspace> halfspaces;
  for (const auto& f : facets) {
    halfspaces.push_back(f.witness());
    if (auto a = finite_apex(f.witness())) got.insert({*a, f.witness().sectors()});
  }
  const std::set<std::pair<TropicalPoint, SectorSet>> want{{pt({0, 1, 2}), SectorSet::of({1})},
                                                          {pt({0, 3, 3}), SectorSet::of({0})},
                                                          {pt({0, 3, 1}), SectorSet::of({1, 2})}};
  c.expect(got == want, "witnesses (0,1,2) sector {2}, (0,3,3) sector {1}, (0,3,1) sectors {2,3}");

  auto in_all = [](const std::vector<TropicalHalfspace>& hs, const TropicalPoint& x) {
    for (const auto& h : hs)
      if (halfspace_position(x, h) == Position::outside) return false;
    return true;
  };
  bool vertices_in = true;
  for (const auto& v : tri) vertices_in = vertices_in && in_all(halfspaces, v);
  c.expect(vertices_in, "P lies in the three halfspaces");
  bool ray_outside_p = true;
  for (const Rational& s : {Rational(1, 2), Rational(1), Rational(3), Rational(10), Rational(1000)}) {
    const TropicalPoint x(RationalVector{0, 3, -s});
    ray_outside_p = ray_outside_p && in_all(halfspaces, x) && !contains(tri, x);
  }
  c.expect(ray_outside_p, "points (0,3,-s) of the downward ray lie in the three halfspaces but not in P");

  // Probe grid: chart coordinates in [-3, 6] with step 1/2.
  auto half = [](int n) {
    Rational x(n, 2);
    x.canonicalize();
    return x;
  };
  std::vector<TropicalPoint> grid;
  for (int a = -6; a <= 12; ++a)
    for (int b = -6; b <= 12; ++b) grid.emplace_back(RationalVector{0, half(a), half(b)});
  std::vector<std::string> working;
  for (unsigned s = 1; s < 7; ++s) {
    SectorSet a;
    for (std::size_t j = 0; j < 3; ++j)
      if (s >> j & 1) a.insert(j);
    auto four = halfspaces;
    four.emplace_back(TropicalHyperplane(pt({0, 3, 0})), a);
    bool contains_p = true;
    for (const auto& v : tri) contains_p = contains_p && halfspace_position(v, four.back()) != Position::outside;
    if (!contains_p) continue;
    bool equal = true;
    for (const auto& x : grid) equal = equal && (in_all(four, x) == contains(tri, x));
    if (equal) working.push_back(sectors_text(a));
  }
  std::string which;
  for (const auto& w : working) which += " " + w;
  c.expect(!working.empty(), "a fourth halfspace at (0,3,0) gives equality on the " + std::to_string(grid.size()) +
                                 "-point grid; sector sets:" + which);
  const TropicalHalfspace written(TropicalHyperplane(pt({0, 3, 0})), SectorSet::of({1, 2}));
  c.note("(0,3,-5) against apex (0,3,0) sectors {2,3}: " + to_string(halfspace_position(pt({0, 3, -5}), written)));
}

// ---------------------------------------------------------------- 2

void model(Criterion& c, Context&) {
  const auto m = fixtures::model();
  const auto facets = j_facets(m);
  const std::map<std::string, TropicalPoint> want{{"ABCD", pt({0, 2, 3, 5})}, {"ABDE", pt({0, 2, 4, 4})},
                                                  {"ABEF", pt({0, 2, 5, 3})}, {"ABCF", pt({0, 2, 5, 5})},
                                                  {"CDEF", pt({0, 1, 5, 5})}};
  std::map<std::string, std::set<TropicalPoint>> got;
  for (const auto& f : facets)
    for (const auto& w : f.witnesses)
      if (auto a = finite_apex(w)) got[vertex_label(f.vertices)].insert(*a);
  bool apices = got.size() == want.size();
  for (const auto& [name, apex] : want) apices = apices && got.count(name) && got[name].count(apex);
  c.expect(labels(facets) == std::set<std::string>{"ABCD", "ABDE", "ABEF", "ABCF", "CDEF"},
           "J-facets " + labels_text(labels(facets)));
  c.expect(apices, "apices ABDC@0235 ABED@0244 ABFE@0253 ABFC@0255 CDEF@0155");

  const FaceSystem sys(m, sample_lifts(m, kSamples, kSeed));
  const auto faces = sys.all_faces();
  c.expect(f_vector(faces) == std::vector<std::size_t>{6, 7, 3}, "new-face f-vector " + join(f_vector(faces)));
  c.expect(faces.size() > 1 && labels(faces[1]) == std::set<std::string>{"AB", "AC", "CD", "DE", "EF", "CF", "BF"},
           "edges " + (faces.size() > 1 ? labels_text(labels(faces[1])) : "{}"));
  const Face* under = faces.size() > 2 ? face_with(faces[2], "ABCDEF") : nullptr;
  std::set<std::size_t> belly;
  for (const auto* s : {"ABCD", "ABDE", "ABEF"}) {
    std::vector<TropicalPoint> gens;
    for (auto i : oracle::bits(mask(s))) gens.push_back(m[i]);
    for (auto cell : image_cells(sys.complex(), gens))
      if (sys.complex().cell(cell).dim == 2) belly.insert(cell);
  }
  c.expect(under && under->cells == std::vector<std::size_t>(belly.begin(), belly.end()),
           "underbelly is the union of the 2-cells of ABCD, ABDE and ABEF");
  c.note("sampled lifts: " + std::to_string(sys.lifts().size()) + " (hull, " + std::to_string(kSamples) +
         " generic, J-facet lifts)");
}

// ---------------------------------------------------------------- 3

void hull_lift_model(Criterion& c, Context&) {
  const auto m = fixtures::model();
  const LiftAnalysis hull(hull_lift(m), CellComplex::decompose(m));
  const auto t = [](long e) { return K::monomial(1, e); };
  const KVector expect{-(t(6) + t(5) - t(2) - t(1)), t(4) + t(3) - t(1) - 1, t(2) - t(1), t(2) - t(1)};
  std::optional<KVector> abde, abcf;
  for (auto f : hull.facets()) {
    if (hull.faces()[f].generators == mask("ABDE")) abde = hull.faces()[f].normal;
    if (hull.faces()[f].generators == mask("ABCF")) abcf = hull.faces()[f].normal;
  }
  c.expect(abde && proportional(*abde, expect), "ABDE functional proportional to the expected one");
  auto image_ok = [&](const std::optional<KVector>& f, const TropicalPoint& apex, SectorSet sectors) {
    if (!f) return false;
    const auto h = halfspace_image(*f);
    const auto a = finite_apex(h);
    return a && *a == apex && h.sectors() == sectors;
  };
  c.expect(image_ok(abde, pt({0, 2, 4, 4}), SectorSet::of({1, 2, 3})), "ABDE image: apex 0244, sectors {2,3,4}");
  c.expect(image_ok(abcf, pt({0, 2, 5, 5}), SectorSet::of({0})), "ABCF image: apex 0255, sector {1}");

  const auto got = edge_sign_vectors(hull, mask("AB"));
  std::set<std::vector<int>> want;
  for (const auto* s : {"+---", "+-00", "+-++", "0-++", "-0++", "-+++"}) want.insert(signs(s));
  const std::set<std::vector<int>> have(got.begin(), got.end());
  std::string text;
  for (const auto& s : got) text += " " + sign_string(s);
  c.expect(have == want, "edge_sign_vectors(AB):" + text);
  std::string extra;
  for (const auto& s : have)
    if (!want.count(s)) extra += " " + sign_string(s);
  if (!extra.empty()) c.note("not in the expected set:" + extra);
}

// ---------------------------------------------------------------- 4

void three_tier(Criterion& c, Context&) {
  const auto v = fixtures::three_tier();
  const auto facets = j_facets(v);
  c.expect(labels(facets) == std::set<std::string>{"ABFI", "ABCD", "ABDE", "CDEFG", "CDEGH", "CDEHI"},
           "J-facets " + labels_text(labels(facets)));
  // Brute force over a grid of apices with every sector set.
  std::set<oracle::Mask> grid = oracle::grid_j_facets(v, 0, 9, 1), mine;
  for (const auto& f : facets) mine.insert(f.vertices);
  c.note(std::string("grid scan of apices ") + (grid == mine ? "agrees with" : "differs from") + " the computed set");
  const auto lat = j_face_lattice(v, facets);
  bool chain = true;
  IndexMask prev = 0;
  for (const auto* s : {"D", "CDE", "CDEG", "CDEFG"}) {
    chain = chain && lat.find(mask(s)) && (mask(s) & prev) == prev && mask(s) != prev;
    prev = mask(s);
  }
  c.expect(chain, "lattice contains D < CDE < CDEG < CDEFG");
  c.expect(!lat.graded(), "lattice is not graded");
  const auto text = jfacets_report(v).text;
  c.expect(text.find("not graded") != std::string::npos, "jfacets reports it as not graded");
}

// ---------------------------------------------------------------- 5

void cube(Criterion& c, Context&) {
  const auto v = fixtures::cube_pendant();
  const FaceSystem sys(v, sample_lifts(v, kSamples, kSeed));
  const auto faces = sys.all_faces();
  c.expect(f_vector(faces) == std::vector<std::size_t>{5, 7, 4}, "new-face f-vector " + join(f_vector(faces)));
  c.expect(faces.size() > 2 && labels(faces[2]) == std::set<std::string>{"ACD", "BCD", "ABCE", "ABDE"},
           "facets " + (faces.size() > 2 ? labels_text(labels(faces[2])) : "{}"));
  const Face* x = faces.size() > 2 ? face_with(faces[2], "ABCE") : nullptr;
  const Face* y = faces.size() > 2 ? face_with(faces[2], "ABDE") : nullptr;
  const Face* ae = faces.size() > 1 ? face_with(faces[1], "AE") : nullptr;
  const Face* be = faces.size() > 1 ? face_with(faces[1], "BE") : nullptr;
  bool meet = x && y && ae && be;
  if (meet) {
    auto cells = ae->cells;
    cells.insert(cells.end(), be->cells.begin(), be->cells.end());
    const auto want = sorted(sys.closure(cells));
    for (std::size_t l = 0; l < sys.lifts().size(); ++l) meet = meet && sorted(sys.intersection(*x, *y, l)) == want;
  }
  c.expect(meet, "ABCE meets ABDE in AE u BE in all " + std::to_string(sys.lifts().size()) + " lifts");
}

// ---------------------------------------------------------------- 6

void octahedron(Criterion& c, Context&) {
  const auto v = fixtures::octahedron();
  const auto cx = CellComplex::decompose(v);
  auto octahedral = [](const LiftAnalysis& a) {
    std::vector<std::size_t> fv;
    for (int k = 0; k <= a.dim() - 1; ++k) fv.push_back(a.faces_of_dim(k).size());
    if (fv != std::vector<std::size_t>{6, 12, 8}) return std::make_pair(false, join(fv));
    // The only simplicial 3-polytope with six vertices of degree four.
    std::vector<int> degree(6, 0);
    for (auto f : a.facets()) {
      const auto g = a.faces()[f].generators;
      if (std::popcount(g) != 3) return std::make_pair(false, join(fv) + " with a non-triangular facet");
      for (auto i : oracle::bits(g)) ++degree[i];
    }
    for (int d : degree)
      if (d != 4) return std::make_pair(false, join(fv) + " with a vertex of degree " + std::to_string(d));
    return std::make_pair(true, join(fv));
  };
  bool all = true;
  std::string text;
  for (std::uint64_t s = kSeed; s < kSeed + kSamples; ++s) {
    const auto [ok, what] = octahedral(LiftAnalysis(generic_lift(v, s), cx));
    all = all && ok;
    text += " " + what;
  }
  c.expect(all, "generic lifts " + std::to_string(kSamples) + " face lattices:" + text);
  c.note("hull lift face lattice: " + octahedral(LiftAnalysis(hull_lift(v), cx)).second);

  std::size_t at_origin = 0;
  for (const auto& f : j_facets(v))
    for (const auto& w : f.witnesses)
      if (auto a = finite_apex(w); a && *a == pt({0, 0, 0, 0})) ++at_origin;
  c.expect(at_origin == 4, std::to_string(at_origin) + " J-facet witnesses have apex 0");

  const FaceSystem sys(v, sample_lifts(v, kSamples, kSeed));
  c.note("new-face f-vector (lift-based faces): " + join(f_vector(sys.all_faces())));
}

// ---------------------------------------------------------------- 7

void resolutions(Criterion& c, Context&) {
  // Oracle first: Betti numbers from the Taylor complex.
  auto check_against_taylor = [&](const std::string& name, const MonomialIdeal& ideal, const LabeledComplex& lc,
                                  const ResolutionReport& r) {
    const auto taylor = oracle::taylor_betti(ideal.generators);
    auto betti = betti_numbers(lc);
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
    auto ranks = lc.ranks();
    bool bounded = ranks.size() >= taylor.size();
    for (std::size_t i = 0; bounded && i < taylor.size(); ++i) bounded = ranks[i] >= taylor[i];
    c.expect(betti == taylor && bounded && r.minimal == (ranks == taylor),
             name + ": Betti numbers " + join(taylor) + " agree with the Taylor oracle");
  };

  {
    const auto ideal = fixtures::ideal_xy();
    const LabeledComplex lc(ideal, hull_lift(tropicalize(ideal)));
    const auto r = check_resolution(lc);
    c.expect(r.resolution && r.minimal && lc.ranks() == std::vector<std::size_t>{2, 1},
             "<x,y>: minimal resolution with ranks " + join(lc.ranks()));
    check_against_taylor("<x,y>", ideal, lc, r);
  }
  {
    const auto ideal = fixtures::ideal_path();
    const LabeledComplex lc(ideal, hull_lift(tropicalize(ideal)));
    const auto r = check_resolution(lc);
    const auto scarf = scarf_complex(ideal);
    std::set<IndexMask> cells;
    for (const auto& cell : lc.cells()) cells.insert(cell.vertices);
    const std::set<IndexMask> path{1, 2, 4, 8, 0b0011, 0b0110, 0b1100};
    c.expect(std::set<IndexMask>(scarf.begin(), scarf.end()) == path && cells == path,
             "<x^4,x^3y,xy^3,y^4>: Scarf complex is the path, equal to the hull complex");
    c.expect(r.resolution && r.minimal && lc.ranks() == std::vector<std::size_t>{4, 3},
             "<x^4,x^3y,xy^3,y^4>: minimal resolution with ranks " + join(lc.ranks()));
    const bool generic = is_tropically_generic(ideal);
    c.expect(!generic || (r.minimal && cells == path),
             std::string("is_tropically_generic = ") + (generic ? "true" : "false") +
                 ", consistent with a minimal Scarf resolution");
    check_against_taylor("<x^4,x^3y,xy^3,y^4>", ideal, lc, r);
  }
  {
    const auto ideal = fixtures::ideal_model();
    const auto points = tropicalize(ideal);
    std::vector<Lift> lifts{hull_lift(points)};
    for (std::uint64_t s = kSeed; s < kSeed + kSamples; ++s) lifts.push_back(generic_lift(points, s));
    std::set<std::vector<IndexMask>> classes;
    bool all = true;
    std::string ranks;
    for (const auto& lift : lifts) {
      const LabeledComplex lc(ideal, lift);
      const auto r = check_resolution(lc);
      all = all && r.resolution;
      classes.insert(lc.key());
      ranks += " " + join(lc.ranks());
      check_against_taylor("model ideal, " + lift.label, ideal, lc, r);
    }
    c.expect(all, "model ideal: resolution for the hull lift and " + std::to_string(kSamples) + " generic lifts");
    c.expect(classes.size() >= 2, "model ideal: " + std::to_string(classes.size()) + " non-isomorphic labeled complexes");
    c.note("model ideal ranks:" + ranks);
  }
}

// ---------------------------------------------------------------- 8

struct Suite {
  std::string name;
  int cases = 0;
  int failures = 0;
  void check(bool ok) { failures += !ok; }
};

PuiseuxPoly random_poly(std::mt19937_64& rng) {
  std::vector<PuiseuxPoly::Term> terms;
  const int n = static_cast<int>(gen::integer(rng, 1, 4));
  for (int i = 0; i < n; ++i) {
    Rational e(gen::integer(rng, -6, 6), 2);
    e.canonicalize();
    terms.push_back({Rational(gen::integer(rng, -5, 5)), e});
  }
  return PuiseuxPoly(terms);
}

K random_number(std::mt19937_64& rng) {
  const auto num = random_poly(rng);
  if (gen::integer(rng, 0, 2) != 0) return K(num);
  PuiseuxPoly den;
  while (den.is_zero()) den = random_poly(rng);
  return K::fraction(num, den);
}

Suite field_axioms() {
  Suite s{"ordered-field axioms"};
  std::mt19937_64 rng(101);
  for (; s.cases < kPropertyCases; ++s.cases) {
    const auto x = random_number(rng), y = random_number(rng), z = random_number(rng);
    const int c = compare(x, y);
    s.check(((x < y) + (x == y) + (x > y)) == 1);
    s.check(c == (x - y).sign());
    s.check(compare(x + z, y + z) == c);
    if (z.sign() != 0) s.check(compare(x * z, y * z) == c * z.sign());
    s.check((x + y) * z == x * z + y * z);
    s.check((x * y).sign() == x.sign() * y.sign());
    if (!y.is_zero()) s.check((x / y) * y == x);
  }
  return s;
}

Suite membership_round_trip() {
  Suite s{"membership round trip"};
  std::mt19937_64 rng(102);
  for (; s.cases < kPropertyCases; ++s.cases) {
    const std::size_t d = gen::integer(rng, 2, 5), n = gen::integer(rng, 1, 6);
    const auto v = gen::points(rng, n, d, 6, 3);
    std::vector<Rational> c(n);
    for (auto& x : c) x = gen::rational(rng, 5, 3);
    const auto x = tconv_combination(c, v);
    const auto m = membership(x, v);
    s.check(m.inside && tconv_combination(m.coeffs, v) == x);
    s.check(oracle::member_by_types(x, v));
    const auto y = gen::point(rng, d, 8, 2);
    s.check(contains(v, y) == oracle::member_by_types(y, v));
  }
  return s;
}

Suite assignment() {
  Suite s{"tropical_det assignment vs enumeration (d <= 5)"};
  std::mt19937_64 rng(103);
  for (; s.cases < kPropertyCases; ++s.cases) {
    const std::size_t d = gen::integer(rng, 1, 5);
    std::vector<RationalVector> rows(d, RationalVector(d));
    for (auto& r : rows)
      for (auto& x : r) x = s.cases % 2 ? Rational(gen::integer(rng, -2, 2)) : gen::rational(rng, 6, 3);
    const TropicalMatrix m(rows);
    const auto want = oracle::tropical_det(std::vector<std::vector<Rational>>(rows.begin(), rows.end()));
    s.check(tropical_det(m) == want.value);
    s.check(tropical_sign(m).sign == want.sign);
  }
  return s;
}

// The sampled lifts of every fixture, then further generic lifts taken
// round-robin over the fixtures until `count` lifts are visited.
template <class F>
std::size_t for_each_lift(std::size_t count, F&& visit) {
  const auto all = fixtures::all();
  std::size_t visited = 0;
  for (const auto& [name, v] : all)
    for (const auto& lift : sample_lifts(v, kSamples, kSeed)) {
      visit(v, lift);
      ++visited;
    }
  for (std::uint64_t seed = kSeed + kSamples; visited < count; ++seed)
    for (const auto& [name, v] : all) {
      visit(v, generic_lift(v, seed));
      ++visited;
    }
  return visited;
}

Suite chirotope_refinement() {
  Suite s{"chirotope refinement on sampled and further generic lifts of every fixture"};
  s.cases = for_each_lift(kPropertyCases, [&](const std::vector<TropicalPoint>& v, const Lift& lift) {
    for (const auto& [subset, sign] : chirotope(v)) {
      if (sign == 0) continue;
      std::vector<KVector> rows;
      for (auto i : subset) rows.push_back(lift.vectors[i]);
      s.check(oracle::leibniz_det(rows).sign() == sign);
    }
  });
  return s;
}

Suite general_position() {
  Suite s{"general position: 5 lifts with identical simplicial lattices"};
  std::mt19937_64 rng(104);
  auto facet_sets = [](const LiftAnalysis& a) {
    std::set<IndexMask> out;
    for (auto f : a.facets()) out.insert(a.faces()[f].generators);
    return out;
  };
  while (s.cases < kPropertyCases) {
    const std::size_t d = gen::integer(rng, 3, 4), n = gen::integer(rng, d, d + 1);
    const auto v = gen::points(rng, n, d, 5, 1);
    if (!is_general_position(v)) continue;
    ++s.cases;
    const auto cx = CellComplex::decompose(v);
    std::optional<std::set<IndexMask>> first;
    for (std::uint64_t seed = kSeed; seed < kSeed + kSamples; ++seed) {
      const LiftAnalysis a(generic_lift(v, seed), cx);
      s.check(a.simplicial());
      if (!first) first = facet_sets(a);
      s.check(facet_sets(a) == *first);
    }
  }
  return s;
}

Suite boundary_lift_independence() {
  Suite s{"boundary cells are lift-independent on all fixtures"};
  std::map<const TropicalPoint*, std::pair<CellComplex, std::vector<std::size_t>>> complexes;
  s.cases = for_each_lift(kPropertyCases, [&](const std::vector<TropicalPoint>& v, const Lift& lift) {
    auto it = complexes.find(v.data());
    if (it == complexes.end()) {
      auto cx = CellComplex::decompose(v);
      auto want = sorted(cx.boundary_cells());
      it = complexes.emplace(v.data(), std::pair{std::move(cx), std::move(want)}).first;
    }
    s.check(sorted(LiftAnalysis(lift, it->second.first).boundary_image()) == it->second.second);
  });
  return s;
}

Suite extreme_sets(Context& ctx) {
  Suite s{"extreme sets: every computed face on all fixtures"};
  std::mt19937_64 rng(105);
  for (const auto& [name, v] : fixtures::all()) {
    const FaceSystem sys(v, sample_lifts(v, kSamples, kSeed));
    for (const auto& fk : sys.all_faces())
      for (const auto& f : fk) {
        const auto closed = sys.image(f, 0);
        int pairs = 0, attempts = 0;
        while (pairs < kExtremePairs && attempts < 50 * kExtremePairs) {
          ++attempts;
          const auto p = sample_point(rng, v), q = sample_point(rng, v);
          if (sys.contains(closed, p) || sys.contains(closed, q)) continue;
          ++pairs;
          ++s.cases;
          bool avoids = true;
          for (auto c : sys.segment_cells(p, q)) avoids = avoids && !std::binary_search(closed.begin(), closed.end(), c);
          s.check(avoids);
          if (!avoids)
            ctx.counterexamples.push_back({{"check", "extreme set"}, {"fixture", name}, {"face", vertex_label(f.vertices)},
                                           {"k", f.k}, {"p", p.to_string()}, {"q", q.to_string()}});
        }
      }
  }
  return s;
}

void properties(Criterion& c, Context& ctx) {
  for (auto s : {field_axioms(), membership_round_trip(), assignment(), chirotope_refinement(), general_position(),
                 boundary_lift_independence(), extreme_sets(ctx)})
    c.expect(s.failures == 0, s.name + ": " + std::to_string(s.cases) + " cases, " + std::to_string(s.failures) +
                                   " failures");
}

// ---------------------------------------------------------------- 9

// Reduced Betti numbers of a (dim-1)-sphere, degree -1 first.
std::vector<std::size_t> sphere(int dim) {
  std::vector<std::size_t> b(static_cast<std::size_t>(dim + 1), 0);
  b.back() = 1;
  return b;
}

void conjectures(Criterion& c, Context& ctx) {
  std::size_t sphere_failures = 0, intersection_failures = 0;
  for (const auto& [name, v] : fixtures::all()) {
    const FaceSystem sys(v, sample_lifts(v, kSamples, kSeed));
    const auto faces = sys.all_faces();
    const auto h = reduced_homology(simplicial_chain_complex(order_complex(sys.face_poset(faces))));
    auto betti = h.betti();
    betti.resize(std::max(betti.size(), static_cast<std::size_t>(sys.dim() + 1)), 0);
    auto want = sphere(sys.dim());
    want.resize(betti.size(), 0);
    std::string text;
    for (std::size_t i = 0; i < h.groups.size(); ++i) {
      const auto& g = h.groups[i];
      if (g.trivial()) continue;
      text += " H" + std::to_string(static_cast<int>(i) - 1) + "=Z^" + std::to_string(g.free_rank);
      for (const auto& t : g.torsion) text += "+Z/" + t.get_str();
    }
    const bool is_sphere = betti == want;
    c.note(name + ": new-face complex homology" + (text.empty() ? " trivial" : text) +
           (is_sphere ? " (sphere)" : " (not a sphere)"));
    if (!is_sphere) {
      ++sphere_failures;
      json b = json::array();
      for (auto x : h.betti()) b.push_back(x);
      json fv = json::array();
      for (const auto& fk : faces) fv.push_back(fk.size());
      ctx.counterexamples.push_back({{"check", "new-face complex is a sphere"}, {"fixture", name},
                                     {"points", [&] {
                                        json p = json::array();
                                        for (const auto& x : v) p.push_back(x.to_string());
                                        return p;
                                      }()},
                                     {"f_vector", fv}, {"reduced_betti_from_degree_-1", b}, {"homology", text}});
    }

    // Face intersections compared across lifts.
    std::vector<const Face*> all;
    for (const auto& fk : faces)
      for (const auto& f : fk) all.push_back(&f);
    std::size_t differing = 0;
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        const auto first = sorted(sys.intersection(*all[a], *all[b], 0));
        for (std::size_t l = 1; l < sys.lifts().size(); ++l) {
          const auto other = sorted(sys.intersection(*all[a], *all[b], l));
          if (other == first) continue;
          ++differing;
          ctx.counterexamples.push_back({{"check", "face intersections are lift-independent"}, {"fixture", name},
                                         {"faces", {vertex_label(all[a]->vertices), vertex_label(all[b]->vertices)}},
                                         {"lifts", {sys.lifts()[0].lift().label, sys.lifts()[l].lift().label}},
                                         {"cells", {first.size(), other.size()}}});
          break;
        }
      }
    intersection_failures += differing;
    c.note(name + ": " + std::to_string(differing) + " face pairs whose intersection depends on the lift");
  }
  const auto path = ctx.artifacts / "conjecture_counterexamples.json";
  std::ofstream(path) << ctx.counterexamples.dump(2) << "\n";
  c.note(std::to_string(sphere_failures) + " sphere and " + std::to_string(intersection_failures) +
         " intersection counterexamples; " + std::to_string(ctx.counterexamples.size()) + " records in " + path.string());
  c.expect(std::filesystem::exists(path), "checks ran on every fixture and the artifact was written");
}

struct Entry {
  int id;
  std::string title;
  std::function<void(Criterion&, Context&)> run;
  double limit = 0;  // seconds, 0 for none
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::string artifacts = "artifacts";
  app.add_option("--artifacts", artifacts, "directory for machine-readable counterexamples");
  CLI11_PARSE(app, argc, argv);
  Context ctx;
  ctx.artifacts = artifacts;
  std::filesystem::create_directories(ctx.artifacts);

  const std::vector<Entry> entries{
      {1, "triangle: J-facets and the fourth halfspace", triangle, kTriangleSeconds},
      {2, "model: J-facets, new faces, underbelly", model, kModelSeconds},
      {3, "model hull lift: facet functionals, images, edge sign vectors", hull_lift_model, kHullLiftSeconds},
      {4, "three-tier model: J-facets and a non-graded lattice", three_tier},
      {5, "cube with pendant edge: new faces and an intersection", cube},
      {6, "(2,4)-hypersimplex: lifted lattices and apex-0 witnesses", octahedron},
      {7, "cellular resolutions", resolutions, kResolutionSeconds},
      {8, "property suites", properties},
      {9, "conjecture checks (reported)", conjectures},
  };

  bool all = true;
  json summary = json::array();
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    bool crashed = false;
    try {
      e.run(c, ctx);
    } catch (const std::exception& ex) {
      crashed = true;
      c.expect(false, std::string("CRASH: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit > 0 && !crashed) {
      std::ostringstream t;
      t.precision(1);
      t << std::fixed << "runtime under " << e.limit << " s";
      c.expect(seconds < e.limit, t.str());
    }
    std::ostringstream head;
    head.precision(2);
    head << std::fixed << "criterion " << e.id << ": " << (c.pass() ? "PASS" : "FAIL") << "  " << e.title << " ("
         << seconds << " s)";
    std::cout << head.str() << "\n";
    for (const auto& line : c.lines()) std::cout << "    " << line << "\n";
    std::cout.flush();
    all = all && c.pass();
    summary.push_back({{"criterion", e.id}, {"pass", c.pass()}, {"seconds", seconds}, {"details", c.lines()}});
  }
  std::ofstream(ctx.artifacts / "acceptance_summary.json") << summary.dump(2) << "\n";
  return all ? 0 : 1;
}
