#include "tropt/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tropt/problem_io.hpp"

namespace tropt {
namespace {

struct Pt {
  double x = 0.0;
  double y = 0.0;
};

// u1 s1 + u2 s2 in conventional coordinates; generators are star matrices,
// so every component stays finite for finite u.
Pt span_point(const Mat& gen, double u1, double u2) {
  const double u[2] = {u1, u2};
  double comp[2];
  for (int i = 0; i < 2; ++i) {
    bool seen = false;
    double best = 0.0;
    for (int j = 0; j < 2; ++j) {
      if (gen.at(i, j).is_null()) continue;
      const double t = gen.at(i, j).value() + u[j];
      if (!seen || t > best) best = t, seen = true;
    }
    comp[i] = best;
  }
  return {comp[0], comp[1]};
}

struct Region {
  std::vector<Pt> boundary;  // one ray, the anchor, the other ray
  std::vector<Pt> polygon;   // boundary closed off towards the upper right
  Pt anchor;
};

Region make_region(const Mat& gen, double u1_min, double u2_min,
                   double extent) {
  constexpr int kSteps = 160;
  Region r;
  r.anchor = span_point(gen, u1_min, u2_min);
  std::vector<Pt> grow2, grow1;
  for (int k = 1; k <= kSteps; ++k) {
    const double t = extent * k / kSteps;
    grow2.push_back(span_point(gen, u1_min, u2_min + t));
    grow1.push_back(span_point(gen, u1_min + t, u2_min));
  }
  r.boundary.assign(grow2.rbegin(), grow2.rend());
  r.boundary.push_back(r.anchor);
  r.boundary.insert(r.boundary.end(), grow1.begin(), grow1.end());
  // both rays run diagonally by the end; extend them to close the polygon
  r.polygon = r.boundary;
  r.polygon.push_back({grow1.back().x + extent, grow1.back().y + extent});
  r.polygon.push_back({grow2.back().x + extent, grow2.back().y + extent});
  return r;
}

std::optional<Pt> column_point(const Mat& m, int j) {
  if (m.at(0, j).is_null() || m.at(1, j).is_null()) return std::nullopt;
  return Pt{m.at(0, j).value(), m.at(1, j).value()};
}

std::string num(double v) {
  return format_number(std::round(v * 100.0) / 100.0);
}

}  // namespace

std::string render_svg(const PlotInput& in) {
  if (in.A.rows() != 2 || in.A.cols() != 2 ||
      in.solution_generator.rows() != 2 || in.lower.rows() != 2) {
    throw std::invalid_argument("plotting is limited to two-dimensional problems");
  }
  if (in.A.semifield() != SemifieldId::MaxPlus) {
    throw std::invalid_argument("plotting is limited to max-plus problems");
  }

  // Gather the finite feature points that the view must contain.
  std::vector<Pt> features{{0.0, 0.0}};
  for (int j = 0; j < 2; ++j) {
    if (const auto p = column_point(in.A, j)) features.push_back(*p);
    if (const auto p = column_point(in.solution_generator, j)) {
      features.push_back(*p);
    }
    if (in.constraint_generator) {
      if (const auto p = column_point(*in.constraint_generator, j)) {
        features.push_back(*p);
      }
    }
  }
  if (is_regular(in.lower)) {
    features.push_back(Pt{in.lower.at(0, 0).value(), in.lower.at(1, 0).value()});
  }
  if (in.minimal) {
    features.push_back(Pt{in.minimal->at(0, 0).value(),
                          in.minimal->at(1, 0).value()});
  }

  double wx0 = features[0].x, wx1 = features[0].x;
  double wy0 = features[0].y, wy1 = features[0].y;
  for (const Pt& p : features) {
    wx0 = std::min(wx0, p.x), wx1 = std::max(wx1, p.x);
    wy0 = std::min(wy0, p.y), wy1 = std::max(wy1, p.y);
  }
  const double span = std::max({wx1 - wx0, wy1 - wy0, 2.0});
  const double margin = 0.1 * span;
  wx0 -= margin, wx1 = wx0 + span + 2 * margin;
  wy0 -= margin, wy1 = wy0 + span + 2 * margin;

  constexpr double kView = 600.0;
  const double scale = kView / (span + 2 * margin);
  const auto sx = [&](double wx) { return (wx - wx0) * scale; };
  const auto sy = [&](double wy) { return kView - (wy - wy0) * scale; };

  const double extent = 1.5 * span + 4.0;
  const double display_min = std::min(wx0, wy0) - extent;
  const auto bound_or = [&](int i) {
    return in.lower.at(i, 0).is_null() ? display_min
                                       : in.lower.at(i, 0).value();
  };
  const double u1_min = bound_or(0), u2_min = bound_or(1);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n"
      << "<defs>\n"
      << "<pattern id=\"hatch\" width=\"8\" height=\"8\" "
         "patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#8aa4c8\" "
         "stroke-width=\"1\"/></pattern>\n"
      << "<marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#444444\"/></marker>\n"
      << "</defs>\n"
      << "<rect width=\"600\" height=\"600\" fill=\"#ffffff\"/>\n";

  // conventional axes through the world origin, when visible
  if (0.0 >= wy0 && 0.0 <= wy1) {
    svg << "<line class=\"axis\" x1=\"0\" y1=\"" << num(sy(0)) << "\" x2=\"600\" y2=\""
        << num(sy(0)) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }
  if (0.0 >= wx0 && 0.0 <= wx1) {
    svg << "<line class=\"axis\" x1=\"" << num(sx(0)) << "\" y1=\"0\" x2=\""
        << num(sx(0)) << "\" y2=\"600\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  }

  const auto emit_points = [&](const std::vector<Pt>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ' ';
      out += num(sx(pts[i].x)) + "," + num(sy(pts[i].y));
    }
    return out;
  };

  if (in.constraint_generator) {
    const Region feasible =
        make_region(*in.constraint_generator, u1_min, u2_min, extent);
    svg << "<polygon class=\"feasible-region\" points=\""
        << emit_points(feasible.polygon)
        << "\" fill=\"url(#hatch)\" fill-opacity=\"0.6\" stroke=\"none\"/>\n";
    svg << "<polyline class=\"feasible-boundary\" points=\""
        << emit_points(feasible.boundary)
        << "\" fill=\"none\" stroke=\"#5577aa\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6,3\"/>\n";
  }

  const Region solution =
      make_region(in.solution_generator, u1_min, u2_min, extent);
  svg << "<polygon class=\"solution-region\" points=\""
      << emit_points(solution.polygon)
      << "\" fill=\"#cc5500\" fill-opacity=\"0.12\" stroke=\"none\"/>\n";
  svg << "<polyline class=\"solution-boundary\" points=\""
      << emit_points(solution.boundary)
      << "\" fill=\"none\" stroke=\"#cc5500\" stroke-width=\"2.5\"/>\n";

  const auto emit_vector = [&](const Pt& p, const char* cls, const char* color,
                               const std::string& label) {
    svg << "<line class=\"" << cls << "\" x1=\"" << num(sx(0)) << "\" y1=\""
        << num(sy(0)) << "\" x2=\"" << num(sx(p.x)) << "\" y2=\"" << num(sy(p.y))
        << "\" data-world-x=\"" << format_number(p.x) << "\" data-world-y=\""
        << format_number(p.y) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    svg << "<text x=\"" << num(sx(p.x) + 6) << "\" y=\"" << num(sy(p.y) - 6)
        << "\" font-size=\"13\" fill=\"" << color << "\">" << label
        << "</text>\n";
  };
  for (int j = 0; j < 2; ++j) {
    if (const auto p = column_point(in.A, j)) {
      emit_vector(*p, "matrix-column", "#444444", "a" + std::to_string(j + 1));
    }
    if (const auto p = column_point(in.solution_generator, j)) {
      emit_vector(*p, "generator-column", "#aa3300",
                  "s" + std::to_string(j + 1));
    }
  }

  if (is_regular(in.lower)) {
    const double gx = in.lower.at(0, 0).value();
    const double gy = in.lower.at(1, 0).value();
    svg << "<circle class=\"lower-bound\" cx=\"" << num(sx(gx)) << "\" cy=\""
        << num(sy(gy)) << "\" r=\"4\" data-world-x=\"" << format_number(gx)
        << "\" data-world-y=\"" << format_number(gy)
        << "\" fill=\"none\" stroke=\"#228833\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << num(sx(gx) + 7) << "\" y=\"" << num(sy(gy) + 12)
        << "\" font-size=\"13\" fill=\"#228833\">g</text>\n";
  }

  if (in.minimal) {
    const double mx = in.minimal->at(0, 0).value();
    const double my = in.minimal->at(1, 0).value();
    svg << "<circle class=\"minimal-solution\" cx=\"" << num(sx(mx))
        << "\" cy=\"" << num(sy(my)) << "\" r=\"5\" data-world-x=\""
        << format_number(mx) << "\" data-world-y=\"" << format_number(my)
        << "\" fill=\"#cc5500\"/>\n";
    svg << "<text x=\"" << num(sx(mx) + 8) << "\" y=\"" << num(sy(my) - 8)
        << "\" font-size=\"13\" fill=\"#cc5500\">x0</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tropt
