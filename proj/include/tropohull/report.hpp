#pragma once

// Reports behind the command-line tool. Each one carries structured data and
// a plain-text rendering; both depend only on the input and the seed.

#include "tropohull/resolution.hpp"
#include "tropohull/tropical.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropohull {

struct Report {
  nlohmann::ordered_json data;
  std::string text;
};

Report hull_report(const std::vector<TropicalPoint>& points);
Report member_report(const std::vector<TropicalPoint>& points, const TropicalPoint& x);

struct FacesOptions {
  std::optional<int> k;     // only faces of this dimension
  std::size_t samples = 5;  // generic lifts
  std::uint64_t seed = 1;
};
Report faces_report(const std::vector<TropicalPoint>& points, const FacesOptions& options);

Report jfacets_report(const std::vector<TropicalPoint>& points);

struct ResolveOptions {
  bool generic = false;     // otherwise the hull lift
  std::uint64_t seed = 1;
  std::size_t compare = 0;  // generic lifts to compare against the hull lift
};
Report resolve_report(const MonomialIdeal& ideal, const std::vector<std::string>& warnings,
                      const ResolveOptions& options);

}  // namespace tropohull
