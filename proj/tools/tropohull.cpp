// tropohull <hull|member|faces|jfacets|resolve|svg> [flags]
//
// Exit status: 0 success, 2 input error, 3 internal invariant violation.

#include "tropohull/errors.hpp"
#include "tropohull/face_theory.hpp"
#include "tropohull/io.hpp"
#include "tropohull/report.hpp"
#include "tropohull/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace tropohull;

constexpr int exit_input = 2;
constexpr int exit_invariant = 3;

void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << body;
}

void emit(const Report& r, bool json, const std::string& out_path) {
  emit(json ? r.data.dump(2) + "\n" : r.text, out_path);
}

const std::vector<TropicalPoint>& need_points(const InputDocument& doc) {
  if (doc.points.empty()) throw InputError("no points in the input");
  return doc.points;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical polytopes through their lifts to the Puiseux series field"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::size_t samples = 5;
  bool json = false;
  std::string out_path;
  std::string input;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", input, "JSON input file")->required();
    sub->add_option("--seed", seed, "seed of the first generic lift");
    sub->add_flag("--json", json, "structured output");
    sub->add_option("--out", out_path, "write to this file instead of stdout");
  };

  auto* hull = app.add_subcommand("hull", "pseudovertices and cell counts of the covector decomposition");
  common(hull);

  std::string point_text;
  auto* member = app.add_subcommand("member", "tropical hull membership");
  common(member);
  member->add_option("--point", point_text, "query point, e.g. 0,2,1")->required();

  int face_dim = -1;
  auto* faces = app.add_subcommand("faces", "faces over a sample of lifts");
  common(faces);
  faces->add_option("--samples", samples, "number of generic lifts")->check(CLI::Range(0, 64));
  faces->add_option("--k", face_dim, "only faces of this dimension");

  auto* jfacets = app.add_subcommand("jfacets", "J-facets and their intersection lattice");
  common(jfacets);

  std::string lift_kind = "hull";
  std::size_t compare = 0;
  auto* resolve = app.add_subcommand("resolve", "cellular resolution of a monomial ideal");
  common(resolve);
  resolve->add_option("--lift", lift_kind, "hull or generic")->check(CLI::IsMember({"hull", "generic"}));
  resolve->add_option("--compare", compare, "also compare this many generic lifts");

  bool overlay = false;
  auto* svg = app.add_subcommand("svg", "SVG picture (TP^2 exact, TP^3 axonometric)");
  common(svg);
  svg->add_flag("--hyperplanes", overlay, "draw the J-facet witness hyperplanes (TP^2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    const InputDocument doc = read_input_file(input);
    if (*resolve) {
      if (doc.kind != InputDocument::Kind::ideal) throw InputError("resolve needs an \"ideal\" input");
      emit(resolve_report(doc.ideal, doc.warnings, {lift_kind == "generic", seed, compare}), json, out_path);
    } else {
      for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
      const auto& points = need_points(doc);
      if (*hull) {
        emit(hull_report(points), json, out_path);
      } else if (*member) {
        emit(member_report(points, parse_point(point_text)), json, out_path);
      } else if (*faces) {
        FacesOptions opt;
        if (face_dim >= 0) opt.k = face_dim;
        opt.samples = samples;
        opt.seed = seed;
        emit(faces_report(points, opt), json, out_path);
      } else if (*jfacets) {
        emit(jfacets_report(points), json, out_path);
      } else if (*svg) {
        SvgOptions opt;
        if (overlay)
          for (const auto& f : j_facets(points)) opt.hyperplanes.push_back(f.witness().hyperplane());
        emit(render_svg(points, opt), out_path);
      }
    }
  } catch (const InputError& e) {
    std::cerr << "tropohull: " << e.what() << "\n";
    return exit_input;
  } catch (const BudgetExceeded& e) {
    std::cerr << "tropohull: " << e.what() << "\n";
    return exit_input;
  } catch (const InvariantViolation& e) {
    std::cerr << "tropohull: invariant violated: " << e.what() << "\n";
    return exit_invariant;
  }
  return 0;
}
