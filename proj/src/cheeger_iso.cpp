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

#include "cheeger/cheeger_iso.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

NeckBand band_containing(const MedialGraph& g, double r) {
  for (const NeckBand& b : neck_bands(g)) {
    if (b.lo < r && r <= b.hi) return b;
  }
  return {-1.0, -1.0};
}

// Volumes and perimeters of the minimal and maximal minimizers at radius r.
struct Bracket {
  double r = 0.0;
  SteinerMeasures lo;
  SteinerMeasures hi;
};

Bracket bracket_at(const MedialGraph& g, double r) {
  const ParallelStructure ps = erode(g, r);
  return {r, steiner_measures(g, truncate_tendrils(g, ps, 0.0)), steiner_measures(g, ps.inclusion)};
}

// Slopes of a piecewise-linear interpolant are nondecreasing.
bool slopes_nondecreasing(const std::vector<std::pair<double, double>>& pts) {
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double dx = pts[i].first - pts[i - 1].first;
    if (dx <= 0.0) continue;
    const double s = (pts[i].second - pts[i - 1].second) / dx;
    if (std::isfinite(prev) && s < prev - 1e-8 * std::max(1.0, std::abs(prev))) return false;
    prev = s;
  }
  return true;
}

}  // namespace

CheegerResult solve_cheeger(const Domain& domain) {
  const MedialGraph& g = domain.graph();
  const double r = domain.cheeger_radius();
  if (!has_no_neck(g, r)) {
    const NeckBand b = band_containing(g, r);
    throw CharacterizationInapplicable(
        "inner Cheeger root " + fmt(r) + " lies where the domain has necks; disconnected for r in (" + fmt(b.lo) +
            ", " + fmt(b.hi) + "]",
        b.lo, b.hi);
  }
  CheegerResult out;
  out.r = r;
  out.h = 1.0 / r;
  out.residual = std::abs(kPi * r * r - parallel_area(g, r));
  const CurvatureProblem problem(domain, out.h);
  const ParallelStructure ps = structure_for(problem);
  out.cheeger_max = maximal_minimizer(problem, ps);
  out.cheeger_min = minimal_minimizer(problem, ps);
  return out;
}

double g_of_kappa(const Domain& domain, double kappa) {
  const CurvatureProblem problem(domain, kappa);
  const double h = domain.cheeger_candidate();
  if (kappa < h * (1.0 - 1e-12)) throw SubcriticalCurvature(kappa, h);
  const MedialGraph& g = domain.graph();
  if (!has_no_neck(g, problem.r)) {
    const NeckBand b = band_containing(g, problem.r);
    throw CharacterizationInapplicable("domain has a neck of radius " + fmt(problem.r), b.lo, b.hi);
  }
  const SteinerMeasures m = steiner_measures(g, include_at(g, problem.r));
  return kappa * m.volume - m.perimeter;
}

namespace {

struct ProfileSolver {
  const Domain& domain;
  const MedialGraph& g;
  double h = 0.0;
  double tol = 0.0;
  double area = 0.0;
  double perimeter = 0.0;
  std::vector<Bracket> brackets;  // by increasing radius, ending at 1/h

  explicit ProfileSolver(const Domain& d) : domain(d), g(d.graph()) {
    h = d.cheeger_candidate();
    const double rh = d.cheeger_radius();
    area = d.polygon().area();
    perimeter = d.polygon().perimeter();
    tol = 1e-10 * area;
    for (const NeckBand& b : neck_bands(g)) {
      if (b.lo < rh) {
        throw CharacterizationInapplicable("domain has necks for r in (" + fmt(b.lo) + ", " + fmt(b.hi) +
                                               "], inside (0, 1/h]",
                                           b.lo, b.hi);
      }
    }
    const double r_floor = 1e-6 * d.polygon().bbox().diagonal();
    std::vector<double> radii{r_floor};
    for (double c : g.critical_radii()) {
      if (c > r_floor && c < rh * (1.0 - 1e-12)) radii.push_back(c);
    }
    radii.push_back(rh);
    for (double r : radii) brackets.push_back(bracket_at(g, r));
  }

  double v_min() const { return brackets.back().lo.volume; }

  ProfileRow solve_at_bracket(const Bracket& b, double v) const {
    ProfileRow row;
    row.kappa = 1.0 / b.r;
    row.interval_lo = b.lo.volume;
    row.interval_hi = b.hi.volume;
    if (b.hi.volume - b.lo.volume <= tol) {
      row.volume = b.hi.volume;
      row.perimeter = b.hi.perimeter;
      return row;
    }
    row.affine = true;
    const ParallelStructure ps = erode(g, b.r);
    double lo = 0.0;
    double hi = 1.0;
    SteinerMeasures m = v <= b.lo.volume ? b.lo : b.hi;
    row.t = v <= b.lo.volume ? 0.0 : 1.0;
    if (std::abs(m.volume - v) > tol) {
      for (int it = 0; it < 200; ++it) {
        row.t = 0.5 * (lo + hi);
        m = steiner_measures(g, truncate_tendrils(g, ps, row.t));
        if (std::abs(m.volume - v) <= tol) break;
        (m.volume < v ? lo : hi) = row.t;
      }
    }
    row.volume = m.volume;
    row.perimeter = m.perimeter;
    return row;
  }

  // v strictly between the volumes at radii a < b.
  ProfileRow solve_between(const Bracket& a, const Bracket& b, double v) const {
    double lo = a.r;
    double hi = b.r;
    SteinerMeasures m;
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      r = 0.5 * (lo + hi);
      m = steiner_measures(g, include_at(g, r));
      if (std::abs(m.volume - v) <= tol || hi - lo <= 1e-15 * hi) break;
      (m.volume > v ? lo : hi) = r;
    }
    const Bracket at = bracket_at(g, r);
    ProfileRow row;
    row.kappa = 1.0 / r;
    row.volume = at.hi.volume;
    row.perimeter = at.hi.perimeter;
    row.interval_lo = at.lo.volume;
    row.interval_hi = at.hi.volume;
    return row;
  }

  ProfileRow solve(double v) const {
    if (v < v_min() - tol || v > area + tol) {
      throw RangeError("volume " + fmt(v) + " outside [" + fmt(v_min()) + ", " + fmt(area) + "]", v_min(), area);
    }
    if (v >= area - tol) {
      ProfileRow row;
      row.volume = area;
      row.perimeter = perimeter;
      row.kappa = std::numeric_limits<double>::infinity();
      row.interval_lo = row.interval_hi = area;
      return row;
    }
    for (std::size_t j = brackets.size(); j-- > 0;) {
      const Bracket& b = brackets[j];
      if (v >= b.lo.volume - tol && v <= b.hi.volume + tol) return solve_at_bracket(b, v);
      if (v < b.lo.volume) return solve_between(b, brackets[j + 1], v);
    }
    const Bracket& first = brackets.front();
    const double f = (v - first.hi.volume) / (area - first.hi.volume);
    ProfileRow row;
    row.volume = v;
    row.perimeter = first.hi.perimeter + f * (perimeter - first.hi.perimeter);
    row.kappa = 1.0 / first.r;
    row.interval_lo = row.interval_hi = v;
    row.endpoint_interpolated = true;
    return row;
  }
};

}  // namespace

std::vector<double> profile_volumes(const Domain& domain, std::size_t samples) {
  if (samples < 2) throw DomainError("profile needs at least 2 samples");
  const ProfileSolver solver(domain);
  const double lo = solver.v_min();
  const double hi = solver.area;
  std::vector<double> inserted;
  for (const Bracket& b : solver.brackets) {
    if (b.hi.volume - b.lo.volume > solver.tol) {
      inserted.push_back(b.lo.volume);
      inserted.push_back(b.hi.volume);
    }
  }
  std::vector<double> out = inserted;
  const double gap = 1e-4 * (hi - lo);
  for (std::size_t i = 0; i < samples; ++i) {
    const double v = i + 1 == samples ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    const bool near = std::any_of(inserted.begin(), inserted.end(), [&](double w) { return std::abs(w - v) < gap; });
    if (!near) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProfileTable isoperimetric_profile(const Domain& domain, const std::vector<double>& volumes) {
  const ProfileSolver solver(domain);
  ProfileTable table;
  table.h = solver.h;
  table.v_min = solver.v_min();
  table.v_max = solver.area;
  for (double v : volumes) table.rows.push_back(solver.solve(v));
  std::sort(table.rows.begin(), table.rows.end(),
            [](const ProfileRow& a, const ProfileRow& b) { return a.volume < b.volume; });

  std::vector<double> kappas{solver.h};
  for (const ProfileRow& row : table.rows) {
    if (std::isfinite(row.kappa)) kappas.push_back(row.kappa);
  }
  for (const Bracket& b : solver.brackets) kappas.push_back(1.0 / b.r);
  const double rh = domain.cheeger_radius();
  for (int i = 1; i < 32; ++i) kappas.push_back(1.0 / (rh * i / 32.0));
  std::sort(kappas.begin(), kappas.end());
  kappas.erase(std::unique(kappas.begin(), kappas.end()), kappas.end());
  for (double k : kappas) table.g_samples.push_back({k, g_of_kappa(domain, k)});
  return table;
}

bool profile_is_convex(const ProfileTable& table) {
  std::vector<std::pair<double, double>> pts;
  for (const ProfileRow& r : table.rows) pts.emplace_back(r.volume, r.perimeter);
  return slopes_nondecreasing(pts);
}

bool g_is_convex(const ProfileTable& table) {
  std::vector<std::pair<double, double>> pts;
  for (const GSample& s : table.g_samples) pts.emplace_back(s.kappa, s.g);
  return slopes_nondecreasing(pts);
}

double legendre_check(const ProfileTable& table, const Domain* domain) {
  double worst = 0.0;
  const auto& gs = table.g_samples;
  for (const ProfileRow& row : table.rows) {
    if (!std::isfinite(row.kappa)) {
      if (domain != nullptr) worst = std::max(worst, std::abs(row.perimeter - domain->polygon().perimeter()));
      continue;
    }
    std::size_t best = 0;
    double sup = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const double val = gs[i].kappa * row.volume - gs[i].g;
      if (val > sup) {
        sup = val;
        best = i;
      }
    }
    if (domain != nullptr && !gs.empty()) {
      double a = gs[best > 0 ? best - 1 : 0].kappa;
      double b = gs[std::min(best + 1, gs.size() - 1)].kappa;
      const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
      auto f = [&](double k) { return k * row.volume - g_of_kappa(*domain, k); };
      double c = b - phi * (b - a);
      double d = a + phi * (b - a);
      double fc = f(c);
      double fd = f(d);
      for (int it = 0; it < 80 && b - a > 1e-13 * b; ++it) {
        if (fc > fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - phi * (b - a);
          fc = f(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + phi * (b - a);
          fd = f(d);
        }
      }
      sup = std::max({sup, fc, fd});
    }
    worst = std::max(worst, std::abs(row.perimeter - sup));
  }
  return worst;
}

}  // namespace cheeger
