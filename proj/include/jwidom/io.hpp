#pragma once

// Documents written by the command-line tool: JSON for solutions and
// sequences, CSV and SVG for parameter scans.

#include "jwidom/minimax.hpp"
#include "jwidom/widom.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace jwidom::io {

using nlohmann::json;

/// %.17g: enough digits to round-trip any double.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json to_json(const ChebyshevSolution& s) {
  json j;
  j["rho_a"] = s.weight.rho_a;
  j["rho_b"] = s.weight.rho_b;
  j["degree"] = s.poly.degree;
  j["coefficients"] = s.poly.power_coeffs();
  j["chebyshev_coefficients"] = s.poly.cheb_coeffs;
  j["roots"] = s.poly.roots ? *s.poly.roots : std::vector<double>{};
  j["reference"] = s.reference;
  j["norm"] = s.norm;
  j["widom"] = s.widom;
  j["iterations"] = s.iterations;
  j["levelling_defect"] = s.levelling_defect;
  j["lower_bound"] = s.lower_bound;
  return j;
}

inline ChebyshevSolution solution_from_json(const json& j) {
  ChebyshevSolution s;
  s.weight = WeightParams::make(j.at("rho_a").get<double>(), j.at("rho_b").get<double>());
  s.poly.degree = j.at("degree").get<int>();
  s.poly.cheb_coeffs = j.at("chebyshev_coefficients").get<std::vector<double>>();
  if (static_cast<int>(s.poly.cheb_coeffs.size()) != s.poly.degree + 1)
    throw DomainError("solution document: coefficient count does not match degree");
  s.poly.roots = j.at("roots").get<std::vector<double>>();
  s.reference = j.at("reference").get<std::vector<double>>();
  s.norm = j.at("norm").get<double>();
  s.widom = j.at("widom").get<double>();
  s.iterations = j.at("iterations").get<int>();
  s.levelling_defect = j.at("levelling_defect").get<double>();
  s.lower_bound = j.value("lower_bound", 0.0);
  return s;
}

/// Recompute the norm of a stored solution from its Chebyshev coefficients.
inline double reevaluate_norm(const ChebyshevSolution& s, int grid_factor = 30) {
  auto f = [&](double theta) { return std::abs(detail::weighted_error(s.weight, s.poly, theta)); };
  const auto points = static_cast<std::size_t>(grid_factor * s.poly.degree + 200);
  return detail::maximize_on_grid(f, 0.0, std::numbers::pi, points).value;
}

inline json to_json(const WidomSequence& s) {
  json j;
  j["rho_a"] = s.weight.rho_a;
  j["rho_b"] = s.weight.rho_b;
  j["n_start"] = s.n_start;
  j["values"] = s.values;
  j["asymptote"] = s.asymptote;
  j["classification"] = std::string(to_string(s.classification));
  return j;
}

inline std::string classification_label(const ScanCell& c) {
  return c.failed ? "Failed" : std::string(to_string(c.classification));
}

/// Header rho_a,rho_b,classification,w1..wN; one row per cell, rho_a fastest.
inline void write_scan_csv(std::ostream& os, const ScanResult& r) {
  os << "rho_a,rho_b,classification";
  for (int n = 1; n <= r.options.n_max; ++n) os << ",w" << n;
  os << "\r\n";
  for (const auto& c : r.cells) {
    os << fmt17(c.weight.rho_a) << ',' << fmt17(c.weight.rho_b) << ',' << classification_label(c);
    for (int n = 0; n < r.options.n_max; ++n) {
      os << ',';
      if (static_cast<std::size_t>(n) < c.values.size()) os << fmt17(c.values[n]);
    }
    os << "\r\n";
  }
}

/// Heat map of a scan: dark gray Increasing, light gray Decreasing, white
/// otherwise, red outline on failed cells; the circle of radius^2 = 1/8 about
/// (1/4, 1/4) in red and the radius^2 = 1.1836088889/8 circle dotted.
inline void write_scan_svg(std::ostream& os, const ScanResult& r, int size_px = 600) {
  const auto& o = r.options;
  const int res = o.resolution;
  const double margin = 50.0;
  const double plot = size_px;
  const double span = o.hi - o.lo;
  const double cell = plot / res;
  // cell centers sit at the grid coordinates; the plotted window is padded
  // by half a cell on each side
  const double pad = span > 0.0 ? span / (res - 1) / 2.0 : 0.5;
  const double w_lo = o.lo - pad, w_hi = o.hi + pad;
  auto px = [&](double v) { return margin + (v - w_lo) / (w_hi - w_lo) * plot; };
  auto py = [&](double v) { return margin + plot - (v - w_lo) / (w_hi - w_lo) * plot; };
  const double unit = plot / (w_hi - w_lo);

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << plot + 2 * margin
     << "\" height=\"" << plot + 2 * margin << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int ib = 0; ib < res; ++ib) {
    for (int ia = 0; ia < res; ++ia) {
      const ScanCell& c = r.at(ia, ib);
      std::string fill = "white";
      if (!c.failed && c.classification == Monotonicity::Increasing) fill = "#555555";
      if (!c.failed && c.classification == Monotonicity::Decreasing) fill = "#cccccc";
      os << "<rect x=\"" << px(c.weight.rho_a) - cell / 2 << "\" y=\"" << py(c.weight.rho_b) - cell / 2
         << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << fill << "\"";
      if (c.failed) os << " stroke=\"red\" stroke-width=\"1\"";
      os << "/>\n";
    }
  }
  const double cx = px(0.25), cy = py(0.25);
  os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << std::sqrt(kInnerRadius2) * unit
     << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
  os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\""
     << std::sqrt(kDottedRadius2) * unit
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"3,4\"/>\n";
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << plot << "\" height=\""
     << plot << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << margin + plot / 2 << "\" y=\"" << plot + 2 * margin - 12
     << "\" text-anchor=\"middle\" font-size=\"14\">rho_a</text>\n";
  os << "<text x=\"14\" y=\"" << margin + plot / 2 << "\" text-anchor=\"middle\" font-size=\"14\" "
     << "transform=\"rotate(-90 14 " << margin + plot / 2 << ")\">rho_b</text>\n";
  os << "</svg>\n";
}

}  // namespace jwidom::io
