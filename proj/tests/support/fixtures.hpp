#pragma once

// Point configurations and ideals shared by the unit and acceptance tests.

#include "tropohull/resolution.hpp"
#include "tropohull/tropical.hpp"

#include <string>
#include <vector>

namespace fixtures {

using tropohull::MonomialIdeal;
using tropohull::TropicalPoint;

std::vector<TropicalPoint> triangle();        // (0,3,0), (0,1,1), (0,2,3)
std::vector<TropicalPoint> small_triangle();  // (0,0,2), (0,0,3), (0,1,0)
std::vector<TropicalPoint> model();           // 0201 0210 0125 0134 0143 0152
std::vector<TropicalPoint> three_tier();
std::vector<TropicalPoint> cube_pendant();
std::vector<TropicalPoint> octahedron();      // the (2,4)-hypersimplex

struct Named {
  std::string name;
  std::vector<TropicalPoint> points;
};
// Every configuration above, in the order listed.
std::vector<Named> all();

MonomialIdeal ideal_xy();
MonomialIdeal ideal_path();   // x^4, x^3 y, x y^3, y^4
MonomialIdeal ideal_model();  // x^2 z, x^2 y, x y^2 z^5, x y^3 z^4, x y^4 z^3, x y^5 z^2
MonomialIdeal ideal_plane();  // nine generators on the tropical plane with apex (0,4,4,4)

// Integer points, e.g. pts({{0, 3, 0}, {0, 1, 1}}).
std::vector<TropicalPoint> pts(const std::vector<std::vector<long>>& rows);
TropicalPoint pt(const std::vector<long>& row);

}  // namespace fixtures
