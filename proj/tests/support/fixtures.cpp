#include "fixtures.hpp"

namespace fixtures {

TropicalPoint pt(const std::vector<long>& row) {
  tropohull::RationalVector c;
  for (long x : row) c.emplace_back(x);
  return TropicalPoint(c);
}

std::vector<TropicalPoint> pts(const std::vector<std::vector<long>>& rows) {
  std::vector<TropicalPoint> out;
  for (const auto& r : rows) out.push_back(pt(r));
  return out;
}

std::vector<TropicalPoint> triangle() { return pts({{0, 3, 0}, {0, 1, 1}, {0, 2, 3}}); }
std::vector<TropicalPoint> small_triangle() { return pts({{0, 0, 2}, {0, 0, 3}, {0, 1, 0}}); }
std::vector<TropicalPoint> model() {
  return pts({{0, 2, 0, 1}, {0, 2, 1, 0}, {0, 1, 2, 5}, {0, 1, 3, 4}, {0, 1, 4, 3}, {0, 1, 5, 2}});
}
std::vector<TropicalPoint> three_tier() {
  return pts({{0, 3, 0, 1},
              {0, 3, 1, 0},
              {0, 2, 2, 4},
              {0, 2, 3, 3},
              {0, 2, 4, 2},
              {0, 1, 5, 8},
              {0, 1, 6, 7},
              {0, 1, 7, 6},
              {0, 1, 8, 5}});
}
std::vector<TropicalPoint> cube_pendant() {
  return pts({{0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 2}, {0, 0, 0, 1}, {0, 1, 1, 0}});
}
std::vector<TropicalPoint> octahedron() {
  return pts({{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}});
}

std::vector<Named> all() {
  return {{"triangle", triangle()},         {"small triangle", small_triangle()}, {"model", model()},
          {"three-tier model", three_tier()}, {"cube with pendant edge", cube_pendant()},
          {"octahedron", octahedron()}};
}

MonomialIdeal ideal_xy() { return {2, {{1, 0}, {0, 1}}}; }
MonomialIdeal ideal_path() { return {2, {{4, 0}, {3, 1}, {1, 3}, {0, 4}}}; }
MonomialIdeal ideal_model() { return {3, {{2, 0, 1}, {2, 1, 0}, {1, 2, 5}, {1, 3, 4}, {1, 4, 3}, {1, 5, 2}}}; }
MonomialIdeal ideal_plane() {
  return {3, {{4, 2, 1}, {4, 1, 2}, {2, 4, 1}, {1, 4, 2}, {2, 1, 4}, {1, 2, 4}, {4, 4, 0}, {4, 0, 4}, {0, 4, 4}}};
}

}  // namespace fixtures
