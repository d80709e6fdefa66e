// Copyright 2026 The Cheeger Polygon Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cheeger/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

PolygonDocument parse_json_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw InputError("document needs a \"vertices\" array");
  }
  PolygonDocument doc;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw InputError("each vertex must be an [x, y] pair of numbers");
    }
    doc.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  if (j.contains("name") && j["name"].is_string()) doc.name = j["name"].get<std::string>();
  if (j.contains("units") && j["units"].is_string()) doc.units = j["units"].get<std::string>();
  return doc;
}

PolygonDocument parse_text_document(const std::string& text) {
  PolygonDocument doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double x = 0.0;
    double y = 0.0;
    std::string rest;
    if (!(ls >> x >> y) || (ls >> rest)) {
      throw InputError("line " + std::to_string(lineno) + ": expected two numbers");
    }
    doc.vertices.push_back({x, y});
  }
  return doc;
}

void svg_region(std::ostream& out, const ArcRegion& region, const char* style) {
  out << "  <path d=\"" << svg_path(region) << "\" fill-rule=\"evenodd\" vector-effect=\"non-scaling-stroke\" "
      << style << "/>\n";
}

}  // namespace

PolygonDocument parse_polygon_document(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("empty polygon document");
  return text[first] == '{' ? parse_json_document(text) : parse_text_document(text);
}

PolygonDocument read_polygon_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_polygon_document(ss.str());
}

Json document_json(const PolygonDocument& doc) {
  Json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.units.empty()) j["units"] = doc.units;
  Json vs = Json::array();
  // Input coordinates are echoed unrounded so documents round-trip.
  for (Point p : doc.vertices) vs.push_back({p.x, p.y});
  j["vertices"] = std::move(vs);
  return j;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(fmt12(x));
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json minimizer_json(const MinimizerSet& set) {
  Json j;
  switch (set.role) {
    case MinimizerRole::maximal:
      j["role"] = "maximal";
      break;
    case MinimizerRole::minimal:
      j["role"] = "minimal";
      break;
    case MinimizerRole::interpolant:
      j["role"] = "interpolant";
      break;
  }
  j["t"] = number(set.t);
  j["area"] = number(set.volume);
  j["perimeter"] = number(set.perimeter);
  j["F"] = number(set.f_value);
  j["components"] = set.region.outer_loops.size();
  return j;
}

void write_profile_csv(const ProfileTable& table, std::ostream& out) {
  out << "V,J,kappa,t,interval_flag\n";
  for (const ProfileRow& row : table.rows) {
    const char* flag = row.affine ? "affine" : row.endpoint_interpolated ? "endpoint" : "-";
    out << fmt12(row.volume) << ',' << fmt12(row.perimeter) << ','
        << (std::isfinite(row.kappa) ? fmt12(row.kappa) : std::string("inf")) << ',' << fmt12(row.t) << ',' << flag
        << '\n';
  }
  out << "# convexity: " << (profile_is_convex(table) ? "pass" : "fail") << '\n';
}

std::string svg_path(const ArcRegion& region) {
  std::ostringstream d;
  auto loop = [&](const ArcLoop& l) {
    if (l.edges.empty()) return;
    const Point s = l.edges.front().start();
    d << 'M' << fmt12(s.x) << ' ' << fmt12(s.y);
    for (const ArcEdge& e : l.edges) {
      const Point p = e.end();
      if (e.is_arc()) {
        // User space is y-up (the group flips it), so a positive sweep flag
        // means counterclockwise here.
        d << " A" << fmt12(e.radius()) << ' ' << fmt12(e.radius()) << " 0 " << (e.sweep() > kPi ? 1 : 0) << ' '
          << (e.orientation() == Orientation::ccw ? 1 : 0) << ' ' << fmt12(p.x) << ' ' << fmt12(p.y);
      } else {
        d << " L" << fmt12(p.x) << ' ' << fmt12(p.y);
      }
    }
    d << " Z ";
  };
  for (const ArcLoop& l : region.outer_loops) loop(l);
  for (const ArcLoop& l : region.hole_loops) loop(l);
  std::string s = d.str();
  if (!s.empty()) s.pop_back();
  return s;
}

void write_svg(const SvgScene& scene, std::ostream& out) {
  BoundingBox box = scene.domain->bbox();
  const double pad = 0.05 * box.diagonal();
  box.inflate(pad);
  const double scale = 800.0 / std::max(box.width(), box.height());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt12(box.width() * scale) << "\" height=\""
      << fmt12(box.height() * scale) << "\" viewBox=\"" << fmt12(box.lo.x) << ' ' << fmt12(-box.hi.y) << ' '
      << fmt12(box.width()) << ' ' << fmt12(box.height()) << "\">\n";
  out << " <g transform=\"scale(1,-1)\">\n";
  svg_region(out, scene.domain->as_region(), "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"");
  if (scene.minimal != nullptr) {
    svg_region(out, *scene.minimal, "fill=\"#9ecae1\" stroke=\"none\"");
  }
  if (scene.selected != nullptr) {
    svg_region(out, *scene.selected, "fill=\"none\" stroke=\"#31a354\" stroke-width=\"1.5\"");
  }
  if (scene.maximal != nullptr) {
    svg_region(out, *scene.maximal, "fill=\"none\" stroke=\"#de2d26\" stroke-width=\"1.5\"");
  }
  for (const SkeletonCurve* c : scene.curves) {
    out << "  <polyline points=\"";
    for (std::size_t i = 0; i < c->points().size(); ++i) {
      const Point p = c->points()[i];
      out << (i ? " " : "") << fmt12(p.x) << ',' << fmt12(p.y);
    }
    out << "\" fill=\"none\" stroke=\"#636363\" stroke-width=\"1\" stroke-dasharray=\"4 3\" "
           "vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << " </g>\n</svg>\n";
}

bool OracleReport::all_pass() const {
  return std::all_of(comparisons.begin(), comparisons.end(), [](const OracleComparison& c) { return c.pass; });
}

OracleReport compare_with_oracle(const Domain& domain, double resolution, double radius) {
  const MedialGraph& g = domain.graph();
  const JordanPolygon& poly = domain.polygon();
  OracleReport rep;
  rep.resolution = resolution;
  rep.radius = radius > 0.0 ? radius : domain.cheeger_radius();
  rep.tolerance_scale = std::max(1.0, 1000.0 / resolution);
  const double r = rep.radius;

  auto add = [&](const std::string& name, double exact, double oracle, double tol) {
    OracleComparison c{name, exact, oracle, 0.0, tol, false};
    c.rel_error = exact != 0.0 ? std::abs(oracle - exact) / std::abs(exact) : std::abs(oracle);
    c.pass = tol == 0.0 ? exact == oracle : c.rel_error <= tol;
    rep.comparisons.push_back(c);
  };
  const double s = rep.tolerance_scale;

  const RasterMask mask = rasterize(poly, resolution, r);
  add("domain_area", poly.area(), mask.area(), 0.02 * s);
  add("domain_perimeter", poly.perimeter(), oracle_perimeter(mask), 0.03 * s);
  add("cheeger_root", domain.cheeger_radius(), oracle_cheeger(mask).r, 0.01 * s);

  const RasterMask eroded = oracle_erode(mask, r);
  const bool in_range = r <= g.inradius();
  add("eroded_area", in_range ? parallel_area(g, r) : 0.0, eroded.area(), 0.02 * s);
  const bool exact_nn = in_range ? has_no_neck(g, r) : true;
  add("no_neck", exact_nn ? 1.0 : 0.0, eroded.component_count() <= 1 ? 1.0 : 0.0, 0.0);
  if (in_range && !eroded.empty()) {
    const SteinerMeasures open = steiner_measures(g, include_at(g, r));
    const RasterMask opened = oracle_dilate(eroded, r);
    add("opened_area", open.volume, opened.area(), 0.02 * s);
    add("opened_perimeter", open.perimeter, oracle_perimeter(opened), 0.03 * s);
  }
  return rep;
}

Json oracle_report_json(const OracleReport& report) {
  Json j;
  j["resolution"] = number(report.resolution);
  j["radius"] = number(report.radius);
  j["tolerance_scale"] = number(report.tolerance_scale);
  Json rows = Json::array();
  for (const OracleComparison& c : report.comparisons) {
    Json row;
    row["quantity"] = c.quantity;
    row["exact"] = number(c.exact);
    row["oracle"] = number(c.oracle);
    row["rel_error"] = number(c.rel_error);
    row["tolerance"] = number(c.tolerance);
    row["pass"] = c.pass;
    rows.push_back(std::move(row));
  }
  j["comparisons"] = std::move(rows);
  j["pass"] = report.all_pass();
  return j;
}

}  // namespace cheeger
