#include "tropohull/svg.hpp"

#include "tropohull/covector.hpp"
#include "tropohull/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tropohull {

namespace {

struct P2 {
  double x = 0, y = 0;
};

// Chart coordinates (x_1, ..., x_{d-1}) as doubles.
std::vector<double> chart(const TropicalPoint& p) {
  std::vector<double> out;
  for (std::size_t i = 1; i < p.dim(); ++i) out.push_back(p[i].get_d());
  return out;
}

// Screen plane before scaling; y grows upwards here.
P2 project(const std::vector<double>& c) {
  if (c.size() == 2) return {c[0], c[1]};
  const double s = std::sqrt(3.0) / 2;
  return {(c[0] - c[1]) * s, c[2] - (c[0] + c[1]) / 2};
}

// Larger is further from the viewer.
double depth(const std::vector<double>& c) { return c.size() == 2 ? 0 : -(c[0] + c[1]) + c[2] * 0.01; }

std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Frame {
 public:
  Frame(const std::vector<P2>& pts, double size) : size_(size) {
    double x0 = std::numeric_limits<double>::max(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& p : pts) {
      x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    const double extent = std::max({x1 - x0, y1 - y0, 1e-9});
    scale_ = (size - 2 * margin) / extent;
    cx_ = (x0 + x1) / 2, cy_ = (y0 + y1) / 2;
  }
  std::string x(const P2& p) const { return num(size_ / 2 + (p.x - cx_) * scale_); }
  std::string y(const P2& p) const { return num(size_ / 2 - (p.y - cy_) * scale_); }
  double extent_in_chart() const { return (size_ - 2 * margin) / scale_; }

  static constexpr double margin = 40;

 private:
  double size_, scale_ = 1, cx_ = 0, cy_ = 0;
};

// Vertices of a planar convex polygon in cyclic order around their centroid.
std::vector<P2> cyclic(std::vector<P2> pts) {
  P2 c;
  for (const auto& p : pts) c.x += p.x / pts.size(), c.y += p.y / pts.size();
  std::sort(pts.begin(), pts.end(), [&](const P2& a, const P2& b) {
    return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
  });
  return pts;
}

}  // namespace

std::string render_svg(const std::vector<TropicalPoint>& points, const SvgOptions& options) {
  if (points.empty()) throw DimensionError("nothing to draw");
  const std::size_t d = points[0].dim();
  if (d != 3 && d != 4) throw DimensionError("svg output needs points in TP^2 or TP^3, got d = " + std::to_string(d));
  const auto complex = CellComplex::decompose(points);

  std::vector<P2> all;
  for (const auto& p : points) all.push_back(project(chart(p)));
  for (const auto& p : complex.pseudovertices()) all.push_back(project(chart(p)));
  const Frame f(all, options.size);

  struct Polygon {
    double depth;
    std::vector<P2> corners;
  };
  std::vector<Polygon> polygons;
  for (auto id : complex.cells_of_dim(2)) {
    std::vector<P2> corners;
    double z = 0;
    std::size_t n = 0;
    for (auto v : complex.closure(id))
      if (complex.cell(v).dim == 0) {
        const auto c = chart(complex.cell(v).witness);
        corners.push_back(project(c));
        z += depth(c);
        ++n;
      }
    polygons.push_back({n ? z / n : 0, cyclic(std::move(corners))});
  }
  std::stable_sort(polygons.begin(), polygons.end(),
                   [](const Polygon& a, const Polygon& b) { return a.depth > b.depth; });

  std::ostringstream out;
  const std::string sz = num(options.size);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << sz << "\" height=\"" << sz
      << "\" viewBox=\"0 0 " << sz << ' ' << sz << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"cells2\" fill=\"#c8d7ee\" fill-opacity=\"" << (d == 3 ? "1" : "0.45") << "\" stroke=\"none\">\n";
  for (const auto& poly : polygons) {
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < poly.corners.size(); ++i)
      out << (i ? " " : "") << f.x(poly.corners[i]) << ',' << f.y(poly.corners[i]);
    out << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"cells1\" stroke=\"#1f3b66\" stroke-width=\"1.5\" stroke-linecap=\"round\">\n";
  for (auto id : complex.cells_of_dim(1)) {
    std::vector<P2> ends;
    for (auto v : complex.closure(id))
      if (complex.cell(v).dim == 0) ends.push_back(project(chart(complex.cell(v).witness)));
    if (ends.size() != 2) throw InvariantViolation("bounded 1-cell without two endpoints");
    out << "<line x1=\"" << f.x(ends[0]) << "\" y1=\"" << f.y(ends[0]) << "\" x2=\"" << f.x(ends[1]) << "\" y2=\""
        << f.y(ends[1]) << "\"/>\n";
  }
  out << "</g>\n";

  if (!options.hyperplanes.empty() && d == 3) {
    const double reach = f.extent_in_chart() * 2;
    out << "<g id=\"hyperplanes\" stroke=\"#b03a2e\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
    for (const auto& h : options.hyperplanes) {
      if (!h.finite(0) || !h.finite(1) || !h.finite(2)) continue;
      // Chart apex (a1 - a0, a2 - a0); rays along (1,1), (0,-1), (-1,0).
      const double a1 = Rational(*h.apex()[1] - *h.apex()[0]).get_d();
      const double a2 = Rational(*h.apex()[2] - *h.apex()[0]).get_d();
      const P2 apex{a1, a2};
      for (const P2 dir : {P2{1, 1}, P2{0, -1}, P2{-1, 0}}) {
        const P2 far{a1 + dir.x * reach, a2 + dir.y * reach};
        out << "<line x1=\"" << f.x(apex) << "\" y1=\"" << f.y(apex) << "\" x2=\"" << f.x(far) << "\" y2=\""
            << f.y(far) << "\"/>\n";
      }
    }
    out << "</g>\n";
  }

  out << "<g id=\"pseudovertices\" fill=\"#1f3b66\">\n";
  for (const auto& p : complex.pseudovertices()) {
    const P2 q = project(chart(p));
    out << "<circle cx=\"" << f.x(q) << "\" cy=\"" << f.y(q) << "\" r=\"2\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"vertices\" fill=\"#000000\" font-family=\"sans-serif\" font-size=\"13\">\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    const P2 q = project(chart(points[i]));
    out << "<circle cx=\"" << f.x(q) << "\" cy=\"" << f.y(q) << "\" r=\"4\"/>\n";
    if (options.label_vertices) {
      const std::string label = i < 26 ? std::string(1, static_cast<char>('A' + i)) : "v" + std::to_string(i + 1);
      out << "<text x=\"" << f.x(q) << "\" y=\"" << f.y(q) << "\" dx=\"6\" dy=\"-6\">" << label << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace tropohull
