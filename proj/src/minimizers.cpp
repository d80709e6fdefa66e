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

#include "cheeger/minimizers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cheeger/errors.hpp"

namespace cheeger {

Domain::Domain(JordanPolygon polygon)
    : graph_(MedialGraph::build(polygon)), cheeger_radius_(inner_cheeger_root(*graph_)) {}

CurvatureProblem::CurvatureProblem(const Domain& d, double k) : domain(&d), kappa(k), r(1.0 / k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("curvature must be positive and finite");
}

ParallelStructure structure_for(const CurvatureProblem& problem) {
  return erode(problem.domain->graph(), problem.r);
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void check_hypotheses(const CurvatureProblem& problem, const ParallelStructure& structure) {
  const double h = problem.domain->cheeger_candidate();
  if (problem.kappa < h * (1.0 - 1e-12)) throw SubcriticalCurvature(problem.kappa, h);
  if (std::abs(structure.r - problem.r) > 1e-14 * problem.r) {
    throw DomainError("parallel structure was computed at a different radius");
  }
  if (!structure.connected()) {
    double lo = -1.0;
    double hi = -1.0;
    for (const NeckBand& b : neck_bands(problem.domain->graph())) {
      if (b.lo < problem.r && problem.r <= b.hi) {
        lo = b.lo;
        hi = b.hi;
      }
    }
    throw CharacterizationInapplicable("domain has a neck of radius " + fmt(problem.r) +
                                           (lo >= 0.0 ? "; disconnected for r in (" + fmt(lo) + ", " + fmt(hi) + "]" : ""),
                                       lo, hi);
  }
}

MinimizerSet build(const CurvatureProblem& problem, Inclusion inclusion, MinimizerRole role, double t) {
  const MedialGraph& g = problem.domain->graph();
  const double r = problem.r;
  const double tol = g.tolerance().geom;
  MinimizerSet set;
  set.role = role;
  set.t = t;
  set.kappa = problem.kappa;
  set.r = r;
  set.core = trace_cores(g, inclusion);
  set.core_inclusion = std::move(inclusion);
  if (set.core.empty()) throw StructuralError("minimizer core is empty");

  double best = -1.0;
  for (const CoreComponent& c : set.core) {
    if (c.walk.edges.empty()) {
      set.region.outer_loops.push_back(disk_region(c.anchor, r).outer_loops.front());
    } else {
      set.region.outer_loops.push_back(offset_walk(c.walk, r, tol));
      set.core_area += signed_area(c.walk);
      set.core_content += length(c.walk);
    }
  }
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    if (set.core_inclusion.vertex[v] && g.vertices()[v].clearance > best) {
      best = g.vertices()[v].clearance;
      set.witness_center = g.vertices()[v].position;
    }
  }
  if (set.region.outer_loops.size() > 1) {
    std::vector<const ArcLoop*> loops;
    for (const ArcLoop& l : set.region.outer_loops) loops.push_back(&l);
    if (has_crossing(loops, tol)) throw ReachViolation("dilated components overlap");
  }

  const double n = static_cast<double>(set.core.size());
  set.volume = set.core_area + r * set.core_content + kPi * r * r * n;
  set.perimeter = set.core_content + kTwoPi * r * n;
  set.f_value = set.perimeter - problem.kappa * set.volume;
  set.region_area = area(set.region);
  set.region_perimeter = perimeter(set.region);
  if (std::abs(set.region_area - set.volume) > 1e-9 * set.volume ||
      std::abs(set.region_perimeter - set.perimeter) > 1e-9 * set.perimeter) {
    throw StructuralError("Steiner mismatch: area " + fmt(set.region_area) + " vs " + fmt(set.volume) +
                          ", perimeter " + fmt(set.region_perimeter) + " vs " + fmt(set.perimeter));
  }
  return set;
}

}  // namespace

MinimizerSet maximal_minimizer(const CurvatureProblem& problem, const ParallelStructure& structure) {
  check_hypotheses(problem, structure);
  return build(problem, structure.inclusion, MinimizerRole::maximal, 1.0);
}

MinimizerSet minimal_minimizer(const CurvatureProblem& problem, const ParallelStructure& structure) {
  check_hypotheses(problem, structure);
  if (structure.interior_components.empty()) {
    throw CharacterizationInapplicable("parallel set at radius " + fmt(problem.r) + " has empty interior");
  }
  return build(problem, truncate_tendrils(problem.domain->graph(), structure, 0.0), MinimizerRole::minimal,
               0.0);
}

MinimizerSet interpolant(const CurvatureProblem& problem, const ParallelStructure& structure, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("interpolation parameter must lie in [0, 1]");
  check_hypotheses(problem, structure);
  if (structure.interior_components.empty()) {
    throw CharacterizationInapplicable("parallel set at radius " + fmt(problem.r) + " has empty interior");
  }
  return build(problem, truncate_tendrils(problem.domain->graph(), structure, t), MinimizerRole::interpolant,
               t);
}

MinimizerSet solve_for_volume(const CurvatureProblem& problem, const ParallelStructure& structure,
                              double volume) {
  MinimizerSet lo_set = interpolant(problem, structure, 0.0);
  MinimizerSet hi_set = interpolant(problem, structure, 1.0);
  const double tol = 1e-10 * problem.domain->polygon().area();
  if (volume < lo_set.volume - tol || volume > hi_set.volume + tol) {
    throw RangeError("volume " + fmt(volume) + " outside [" + fmt(lo_set.volume) + ", " + fmt(hi_set.volume) + "]",
                     lo_set.volume, hi_set.volume);
  }
  if (std::abs(lo_set.volume - volume) <= tol) return lo_set;
  if (std::abs(hi_set.volume - volume) <= tol) return hi_set;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    MinimizerSet s = interpolant(problem, structure, mid);
    if (std::abs(s.volume - volume) <= tol) return s;
    (s.volume < volume ? lo : hi) = mid;
  }
  return interpolant(problem, structure, 0.5 * (lo + hi));
}

bool InvariantReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.pass; });
}

InvariantReport verify_minimizer_invariants(const MinimizerSet& set, const CurvatureProblem& problem) {
  const MedialGraph& g = problem.domain->graph();
  const double tol = g.tolerance().geom;
  const double r = set.r;
  InvariantReport report;

  InvariantCheck radius{"arc_radius", true, ""};
  InvariantCheck arc_len{"arc_length", true, ""};
  std::size_t arcs = 0;
  for (const ArcLoop& loop : set.region.outer_loops) {
    const auto& es = loop.edges;
    const std::size_t n = es.size();
    auto same_circle = [&](const ArcEdge& a, const ArcEdge& b) {
      return a.is_arc() && b.is_arc() && distance(a.center(), b.center()) <= tol &&
             std::abs(a.radius() - b.radius()) <= tol;
    };
    // Start the merge at an edge that does not continue its predecessor.
    std::size_t first = 0;
    while (first < n && same_circle(es[(first + n - 1) % n], es[first])) ++first;
    if (first == n) first = 0;
    double run = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const ArcEdge& e = es[(first + k) % n];
      if (!e.is_arc()) continue;
      ++arcs;
      if (std::abs(e.radius() - r) > tol) {
        radius.pass = false;
        radius.detail = "arc of radius " + fmt(e.radius());
      }
      run = (k > 0 && same_circle(es[(first + k + n - 1) % n], e)) ? run + e.length() : e.length();
      if (run > kPi * r + tol) {
        arc_len.pass = false;
        arc_len.detail = "arc of length " + fmt(run);
      }
    }
  }
  if (radius.detail.empty()) radius.detail = std::to_string(arcs) + " arcs";
  report.checks.push_back(radius);
  report.checks.push_back(arc_len);

  InvariantCheck vol{"volume_bound", true, ""};
  const double bound = 4.0 * kPi / (problem.kappa * problem.kappa);
  for (const ArcLoop& loop : set.region.outer_loops) {
    const double a = signed_area(loop);
    if (a < bound * (1.0 - 1e-9)) {
      vol.pass = false;
      vol.detail = "component of area " + fmt(a) + " < " + fmt(bound);
    }
  }
  report.checks.push_back(vol);

  auto disk_inside = [&](Point c) {
    return contains_point(set.region, c) != Location::outside && distance_to_boundary(set.region, c) >= r - tol;
  };
  report.checks.push_back({"inscribed_disk", disk_inside(set.witness_center), ""});

  InvariantCheck rolling{"rolling_ball", true, ""};
  std::vector<Point> centers;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    if (set.core_inclusion.vertex[v] && g.vertices()[v].clearance >= r) centers.push_back(g.vertices()[v].position);
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const EdgeSpan& s = set.core_inclusion.edge[e];
    if (!s.on) continue;
    for (double f : {0.25, 0.5, 0.75}) centers.push_back(g.point_at(e, s.lo + f * (s.hi - s.lo)));
  }
  for (Point c : centers) {
    if (!disk_inside(c)) {
      rolling.pass = false;
      rolling.detail = "disk at (" + fmt(c.x) + ", " + fmt(c.y) + ") leaves the set";
      break;
    }
  }
  report.checks.push_back(rolling);
  return report;
}

SteinerMeasures steiner_measures(const MedialGraph& graph, const Inclusion& inclusion) {
  const double r = inclusion.r;
  double core_area = 0.0;
  double content = 0.0;
  const std::vector<CoreComponent> cores = trace_cores(graph, inclusion);
  for (const CoreComponent& c : cores) {
    if (c.walk.edges.empty()) continue;
    core_area += signed_area(c.walk);
    content += length(c.walk);
  }
  const double n = static_cast<double>(cores.size());
  return {core_area + r * content + kPi * r * r * n, content + kTwoPi * r * n};
}

bool contains(const MinimizerSet& set, Point p) { return contains_point(set.region, p) != Location::outside; }

}  // namespace cheeger
