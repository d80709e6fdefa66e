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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cheeger/cheeger_iso.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/fixtures.hpp"
#include "cheeger/io.hpp"
#include "cheeger/minimizers.hpp"
#include "cheeger/parallel_structure.hpp"
#include "cheeger/raster_oracle.hpp"

namespace cheeger {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed check without stopping, so the line lists every miss.
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::string g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Pair {
  ParallelStructure ps;
  MinimizerSet emax;
  MinimizerSet emin;
};

Pair pair_at(const CurvatureProblem& pb) {
  Pair p{structure_for(pb), {}, {}};
  p.emax = maximal_minimizer(pb, p.ps);
  p.emin = minimal_minimizer(pb, p.ps);
  return p;
}

void c1(Outcome& o) {
  const double sq = solve_cheeger(Domain(fixtures::unit_square())).h;
  o.require(std::abs(sq - (2.0 + std::sqrt(kPi))) <= 1e-9, "square h " + g(sq));
  const double rho = (3.0 - std::sqrt(1.0 + 2.0 * kPi)) / (4.0 - kPi);
  const double rect = solve_cheeger(Domain(fixtures::rectangle())).h;
  o.require(std::abs(rect - 1.0 / rho) <= 1e-9, "rectangle h " + g(rect));
  const double disk = solve_cheeger(Domain(fixtures::disk())).h;
  o.require(std::abs(disk - 2.0) <= 1e-3, "disk h " + g(disk));
  o.detail << " square " << g(sq) << ", rectangle " << g(rect) << ", disk " << g(disk);
}

void c2(Outcome& o) {
  const Domain d(fixtures::unit_square());
  const CurvatureProblem pb(d, 5.0);
  const MinimizerSet m = maximal_minimizer(pb, structure_for(pb));
  const double r = 0.2;
  const double side = 1.0 - 2.0 * r;
  const double area = side * side + 4.0 * side * r + kPi * r * r;
  const double perim = 4.0 * side + kTwoPi * r;
  const double f = perim - 5.0 * area;
  o.require(rel(m.volume, area) <= 1e-9, "area " + g(m.volume));
  o.require(rel(m.perimeter, perim) <= 1e-9, "perimeter " + g(m.perimeter));
  o.require(rel(m.f_value, f) <= 1e-9, "F " + g(m.f_value));
  o.require(rel(m.region_area, area) <= 1e-9, "region area " + g(m.region_area));
  o.require(rel(m.region_perimeter, perim) <= 1e-9, "region perimeter " + g(m.region_perimeter));
  o.detail << " area " << g(m.volume) << ", perimeter " << g(m.perimeter) << ", F " << g(m.f_value);
}

void c3(Outcome& o) {
  const Domain sq(fixtures::unit_square());
  const double h = sq.cheeger_candidate();
  double worst = 0.0;
  for (double kappa : {h, 4.0, 5.0, 8.0, 12.0, 20.0, 50.0}) {
    const Pair p = pair_at(CurvatureProblem(sq, kappa));
    o.require(p.ps.tendrils.empty(), "square tendrils at kappa " + g(kappa));
    worst = std::max(worst, std::abs(p.emax.volume - p.emin.volume));
  }
  o.require(worst <= 1e-12, "square volume gap " + g(worst));
  const Domain keyed(fixtures::keyed_square());
  const Pair k = pair_at(CurvatureProblem(keyed, 10.0));
  const double gap = k.emax.volume - k.emin.volume;
  o.require(!k.ps.tendrils.empty(), "keyed has no tendrils");
  o.require(std::abs(gap - 0.1) <= 1e-6, "keyed gap " + g(gap));
  o.detail << " square gap " << g(worst) << ", keyed gap " << g(gap);
}

void c4(Outcome& o) {
  double worst_f = 0.0;
  double worst_affine = 0.0;
  for (const char* name : {"keyed", "keyed_short", "ziggurat"}) {
    const Domain d(fixtures::by_name(name));
    const double kappa = std::string(name) == "ziggurat" ? 4.0 : 10.0;
    const CurvatureProblem pb(d, kappa);
    const Pair p = pair_at(pb);
    const double v0 = p.emin.volume;
    const double v1 = p.emax.volume;
    for (int i = 0; i <= 10; ++i) {
      const double t = i / 10.0;
      const MinimizerSet a = interpolant(pb, p.ps, t);
      worst_f = std::max(worst_f, rel(a.f_value, p.emax.f_value));
      worst_affine = std::max(worst_affine, std::abs(a.volume - (v0 + t * (v1 - v0))));
    }
  }
  o.require(worst_f <= 1e-9, "F spread " + g(worst_f));
  o.require(worst_affine <= 1e-8, "volume off affine " + g(worst_affine));
  o.detail << " F spread " << g(worst_f) << ", affine residual " << g(worst_affine);
}

void c5(Outcome& o) {
  struct Case {
    const char* name;
    double kappas[3];
  };
  const Case cases[] = {{"square", {4.0, 5.0, 12.0}},
                        {"keyed", {6.0, 10.0, 15.0}},
                        {"ziggurat", {4.0, 5.5, 8.0}},
                        {"triangle", {7.0, 10.0, 20.0}}};
  int checks = 0;
  int passed = 0;
  for (const Case& c : cases) {
    const Domain d(fixtures::by_name(c.name));
    for (double kappa : c.kappas) {
      const CurvatureProblem pb(d, kappa);
      const Pair p = pair_at(pb);
      for (const MinimizerSet* s : {&p.emax, &p.emin}) {
        for (const InvariantCheck& chk : verify_minimizer_invariants(*s, pb).checks) {
          ++checks;
          if (chk.pass) {
            ++passed;
          } else {
            o.require(false, std::string(c.name) + " kappa " + g(kappa) + " " + chk.name + ": " + chk.detail);
          }
        }
      }
    }
  }
  o.detail << " " << passed << "/" << checks << " checks";
}

bool in_or_on(const ArcRegion& r, Point p) { return contains_point(r, p) != Location::outside; }
bool strictly_in(const ArcRegion& r, Point p) { return contains_point(r, p) == Location::inside; }

void c6(Outcome& o) {
  std::mt19937_64 rng(20261015);
  int violations = 0;
  for (auto [name, k1] : {std::pair<const char*, double>{"keyed", 10.0}, {"ziggurat", 4.0}}) {
    const Domain d(fixtures::by_name(name));
    const Pair a = pair_at(CurvatureProblem(d, k1));
    const Pair b = pair_at(CurvatureProblem(d, 1.5 * k1));
    const BoundingBox box = d.polygon().bbox();
    std::uniform_real_distribution<double> ux(box.lo.x, box.hi.x);
    std::uniform_real_distribution<double> uy(box.lo.y, box.hi.y);
    for (int k = 0; k < 10000; ++k) {
      const Point p{ux(rng), uy(rng)};
      if (strictly_in(a.emin.region, p) && !in_or_on(a.emax.region, p)) ++violations;
      if (strictly_in(a.emax.region, p) && !in_or_on(b.emin.region, p)) ++violations;
      if (strictly_in(b.emin.region, p) && !in_or_on(b.emax.region, p)) ++violations;
    }
    if (d.polygon().area() > a.emax.volume) {
      o.require(b.emin.volume > a.emax.volume, std::string(name) + " not strict");
    }
    o.detail << " " << name << " |E^m_k2| - |E^M_k1| = " << g(b.emin.volume - a.emax.volume) << ";";
  }
  o.require(violations == 0, std::to_string(violations) + " containment violations");
  o.detail << " violations " << violations;
}

// sup over kappa of kappa V - G(kappa), by golden section in log kappa.
// G is convex so the objective is unimodal.
double legendre_sup(const Domain& d, double v) {
  auto f = [&](double s) {
    const double kappa = std::exp(s);
    return kappa * v - g_of_kappa(d, kappa);
  };
  double a = std::log(d.cheeger_candidate());
  double b = std::log(1e4);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max({f1, f2, f(std::log(d.cheeger_candidate()))});
}

// Second divided differences of (x, y) points; returns the most negative.
double min_second_difference(const std::vector<std::pair<double, double>>& pts) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const auto [x0, y0] = pts[i - 1];
    const auto [x1, y1] = pts[i];
    const auto [x2, y2] = pts[i + 1];
    if (x1 - x0 <= 0.0 || x2 - x1 <= 0.0) continue;
    const double s0 = (y1 - y0) / (x1 - x0);
    const double s1 = (y2 - y1) / (x2 - x1);
    worst = std::min(worst, s1 - s0);
  }
  return worst;
}

void c7(Outcome& o) {
  const Domain d(fixtures::unit_square());
  const ProfileTable tab = isoperimetric_profile(d, profile_volumes(d, 50));
  o.require(tab.rows.size() >= 50, "rows " + std::to_string(tab.rows.size()));
  const double table_route = legendre_check(tab, &d);
  // Direct route: maximize over kappa with fresh G evaluations. The last row
  // is the limit kappa -> infinity, where G(kappa) = kappa - P(Omega) + O(1/kappa).
  double direct = 0.0;
  for (std::size_t i = 0; i + 1 < tab.rows.size(); ++i) {
    const ProfileRow& row = tab.rows[i];
    direct = std::max(direct, std::abs(row.perimeter - legendre_sup(d, row.volume)));
  }
  const double tail = 1e7;
  direct = std::max(direct, std::max(0.0, (tail - g_of_kappa(d, tail)) - 4.0));
  const double tail_gap = 4.0 - (tail - g_of_kappa(d, tail));
  o.require(table_route <= 1e-6, "tabulated Legendre " + g(table_route));
  o.require(direct <= 1e-6, "direct Legendre " + g(direct));
  o.require(tail_gap >= 0.0 && tail_gap <= 1e-6, "endpoint limit gap " + g(tail_gap));
  std::vector<std::pair<double, double>> j;
  for (const ProfileRow& row : tab.rows) j.emplace_back(row.volume, row.perimeter);
  std::vector<std::pair<double, double>> gs;
  const double h = d.cheeger_candidate();
  for (int i = 0; i <= 200; ++i) {
    const double kappa = h * std::pow(50.0, i / 200.0);
    gs.emplace_back(kappa, g_of_kappa(d, kappa));
  }
  const double jd = min_second_difference(j);
  const double gd = min_second_difference(gs);
  o.require(jd >= -1e-8, "J second difference " + g(jd));
  o.require(gd >= -1e-8, "G second difference " + g(gd));
  o.require(profile_is_convex(tab) && g_is_convex(tab), "table convexity flags");
  const ProfileRow& last = tab.rows.back();
  o.require(last.volume == 1.0 && last.perimeter == 4.0, "endpoint row (" + g(last.volume) + ", " + g(last.perimeter) + ")");
  o.detail << " rows " << tab.rows.size() << ", Legendre tabulated " << g(table_route) << " direct " << g(direct)
           << ", min second differences J " << g(jd) << " G " << g(gd);
}

struct Segment {
  double v_lo = 0.0;
  double v_hi = 0.0;
  double slope = 0.0;
  std::size_t first = 0;
  std::size_t last = 0;
};

// Maximal run of rows reported at curvature kappa.
bool affine_run(const ProfileTable& tab, double kappa, Segment& s) {
  bool found = false;
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    if (std::abs(tab.rows[i].kappa - kappa) > 1e-9 * kappa) continue;
    if (!found) s.first = i;
    s.last = i;
    found = true;
  }
  if (!found || s.last == s.first) return false;
  const ProfileRow& a = tab.rows[s.first];
  const ProfileRow& b = tab.rows[s.last];
  s.v_lo = a.volume;
  s.v_hi = b.volume;
  s.slope = (b.perimeter - a.perimeter) / (b.volume - a.volume);
  return true;
}

void check_segment(Outcome& o, const Domain& d, const ProfileTable& tab, double kappa, const char* label) {
  Segment s;
  if (!affine_run(tab, kappa, s)) {
    o.require(false, std::string(label) + " no affine run at " + g(kappa));
    return;
  }
  const Pair p = pair_at(CurvatureProblem(d, kappa));
  o.require(std::abs(s.slope - kappa) <= 1e-6, std::string(label) + " slope " + g(s.slope));
  o.require(std::abs(s.v_lo - p.emin.volume) <= 1e-9, std::string(label) + " segment starts at " + g(s.v_lo));
  o.require(std::abs(s.v_hi - p.emax.volume) <= 1e-9, std::string(label) + " segment ends at " + g(s.v_hi));
  for (std::size_t i = s.first; i <= s.last; ++i) {
    const ProfileRow& row = tab.rows[i];
    const double line = tab.rows[s.first].perimeter + kappa * (row.volume - s.v_lo);
    o.require(std::abs(row.perimeter - line) <= 1e-9, std::string(label) + " row off line at V=" + g(row.volume));
  }
  // Neighbors outside the interval leave the line on both sides.
  if (s.first > 0) {
    const ProfileRow& a = tab.rows[s.first - 1];
    const double left = (tab.rows[s.first].perimeter - a.perimeter) / (s.v_lo - a.volume);
    o.require(left < kappa - 1e-6, std::string(label) + " left slope " + g(left));
  }
  if (s.last + 1 < tab.rows.size()) {
    const ProfileRow& b = tab.rows[s.last + 1];
    const double right = (b.perimeter - tab.rows[s.last].perimeter) / (b.volume - s.v_hi);
    o.require(right > kappa + 1e-6, std::string(label) + " right slope " + g(right));
  }
  o.detail << " " << label << " slope " << g(s.slope) << " over [" << g(s.v_lo) << ", " << g(s.v_hi) << "];";
}

void c8(Outcome& o) {
  const Domain keyed(fixtures::keyed_square());
  check_segment(o, keyed, isoperimetric_profile(keyed, profile_volumes(keyed, 50)), 10.0, "keyed");
  const Domain zig(fixtures::ziggurat());
  const ProfileTable zt = isoperimetric_profile(zig, profile_volumes(zig, 50));
  check_segment(o, zig, zt, 4.0, "ziggurat r=0.25");
  check_segment(o, zig, zt, 8.0, "ziggurat r=0.125");
  Segment a;
  Segment b;
  if (affine_run(zt, 4.0, a) && affine_run(zt, 8.0, b)) {
    o.require(a.v_hi < b.v_lo, "ziggurat segments overlap");
  }
}

void c9(Outcome& o) {
  const Domain d(fixtures::dumbbell());
  double lo = -1.0;
  double hi = -1.0;
  try {
    solve_cheeger(d);
    o.require(false, "dumbbell accepted");
  } catch (const CharacterizationInapplicable& e) {
    o.require(e.has_band(), "rejection carries no band");
    lo = e.band_lo();
    hi = e.band_hi();
  }
  o.require(std::abs(lo - 0.05) <= 1e-6 && std::abs(hi - 0.5) <= 1e-6, "band (" + g(lo) + ", " + g(hi) + "]");
  const RasterMask m = rasterize(d.polygon(), 2000.0);
  int agree = 0;
  int total = 0;
  for (double r : {0.03, 0.045, 0.056, 0.1, 0.2, 0.35, 0.48}) {
    const bool exact = has_no_neck(d.graph(), r);
    const bool oracle = oracle_no_neck(m, r);
    ++total;
    if (exact == oracle) {
      ++agree;
    } else {
      o.require(false, "r=" + g(r) + " exact " + (exact ? "connected" : "necked") + " oracle " +
                           (oracle ? "connected" : "necked"));
    }
  }
  o.detail << " band (" << g(lo) << ", " << g(hi) << "], oracle agrees at " << agree << "/" << total << " radii";
}

void c10(Outcome& o) {
  int fixtures_passed = 0;
  for (const std::string& name : fixtures::names()) {
    const Domain d(fixtures::by_name(name));
    // The dumbbell has no Cheeger root here, so compare inside its neck band.
    const OracleReport rep = compare_with_oracle(d, 1000.0, name == "dumbbell" ? 0.2 : 0.0);
    bool ok = rep.all_pass();
    for (const OracleComparison& c : rep.comparisons) {
      if (!c.pass) o.require(false, name + " " + c.quantity + " rel " + g(c.rel_error));
    }
    if (ok) ++fixtures_passed;
  }
  o.detail << " " << fixtures_passed << "/" << fixtures::names().size() << " fixtures agree;";
  // Erosion-area error at three resolutions against the exact inner parallel
  // area. Gated fixtures have axis-parallel sides on grid lines and r a whole
  // number of cells, so the bias of center distances is exactly one cell.
  // The disk and triangle mix grid phases along the boundary; reported only.
  for (const std::string& name : fixtures::names()) {
    const Domain d(fixtures::by_name(name));
    const bool gated = name != "disk" && name != "triangle";
    const double r = name == "disk" ? 0.5 : 0.04;
    const double exact = parallel_area(d.graph(), r);
    std::vector<double> errs;
    for (double res : {250.0, 500.0, 1000.0}) {
      errs.push_back(std::abs(oracle_erode(rasterize(d.polygon(), res), r).area() - exact));
    }
    o.detail << " " << name << " erosion ratios";
    for (std::size_t i = 1; i < errs.size(); ++i) {
      const double ratio = errs[i] / errs[i - 1];
      o.detail << " " << g(ratio);
      if (gated) o.require(ratio >= 0.4 && ratio <= 0.6, name + " error ratio " + g(ratio));
    }
    o.detail << (gated ? ";" : " (not gated);");
  }
}

}  // namespace
}  // namespace cheeger

int main() {
  using cheeger::Outcome;
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"C1 inner Cheeger formula", cheeger::c1},
      {"C2 maximal minimizer closed form", cheeger::c2},
      {"C3 uniqueness and tendril gap", cheeger::c3},
      {"C4 minimizer family", cheeger::c4},
      {"C5 structural invariants", cheeger::c5},
      {"C6 nestedness", cheeger::c6},
      {"C7 isoperimetric profile", cheeger::c7},
      {"C8 affine segments", cheeger::c8},
      {"C9 no-neck detection", cheeger::c9},
      {"C10 oracle cross-validation", cheeger::c10},
  };
  int failures = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s:%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", label, o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
