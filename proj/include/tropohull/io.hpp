#pragma once

// Input files: a JSON object holding either
//   "points": [[r, r, ...], ...]   r an integer or a string "p/q"
// or
//   "ideal": {"nvars": n, "generators": [[e, ...], ...]}   e a nonnegative integer.
// Every error is a ParseError carrying the line of the offending value.

#include "tropohull/rational.hpp"
#include "tropohull/resolution.hpp"
#include "tropohull/tropical.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tropohull {

struct InputDocument {
  enum class Kind { points, ideal };
  Kind kind = Kind::points;
  std::vector<TropicalPoint> points;  // for an ideal, its tropicalization
  MonomialIdeal ideal;
  std::vector<std::string> warnings;
};

InputDocument parse_input(std::string_view text);
InputDocument read_input_file(const std::string& path);

// Comma-separated rationals, e.g. "0,2,1" or "0,1/2,-3".
TropicalPoint parse_point(std::string_view s);

}  // namespace tropohull
