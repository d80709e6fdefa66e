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

// Command-line front end: analyze, minimize, profile, oracle.
// Exit codes: 0 success, 1 oracle disagreement or internal failure,
// 2 input error, 3 hypotheses of the characterization do not hold.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cheeger/cheeger_iso.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/io.hpp"
#include "cheeger/minimizers.hpp"
#include "cheeger/parallel_structure.hpp"
#include "cheeger/raster_oracle.hpp"

namespace {

using namespace cheeger;

Domain load_domain(const std::string& path) {
  const PolygonDocument doc = read_polygon_document(path);
  JordanPolygon poly(doc.vertices, doc.name);
  if (poly.was_reoriented()) std::cerr << "warning: " << path << " is clockwise; reoriented\n";
  return Domain(std::move(poly));
}

int cmd_analyze(const std::string& path) {
  const Domain domain = load_domain(path);
  const MedialGraph& g = domain.graph();
  const CheegerResult res = solve_cheeger(domain);
  const ParallelStructure ps = erode(g, res.r);
  Json j;
  j["name"] = domain.polygon().name();
  j["vertices"] = domain.polygon().size();
  j["area"] = number(domain.polygon().area());
  j["perimeter"] = number(domain.polygon().perimeter());
  j["inradius"] = number(g.inradius());
  j["h"] = number(res.h);
  j["r"] = number(res.r);
  j["residual"] = number(res.residual);
  j["no_neck"] = has_no_neck(g, res.r);
  Json crit = Json::array();
  for (double c : g.critical_radii()) {
    if (c > g.inradius()) continue;
    crit.push_back({{"r", number(c)}, {"no_neck", has_no_neck(g, c)}});
  }
  j["critical_radii"] = std::move(crit);
  j["gamma1"] = ps.tendrils.size();
  j["gamma2"] = ps.handles.size();
  j["cheeger_set"] = minimizer_json(res.cheeger_max);
  std::cout << dump(j);
  return 0;
}

struct MinimizeArgs {
  std::string path;
  double kappa = 0.0;
  std::optional<double> volume;
  std::optional<double> t;
  std::string svg;
};

// Sampled check that every grid point of the minimal set lies in the
// maximal one.
bool sampled_nested(const MinimizerSet& inner, const MinimizerSet& outer, const BoundingBox& box) {
  constexpr int n = 100;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Point p{box.lo.x + box.width() * (i + 0.5) / n, box.lo.y + box.height() * (k + 0.5) / n};
      if (contains_point(inner.region, p) == Location::inside && contains_point(outer.region, p) == Location::outside) {
        return false;
      }
    }
  }
  return true;
}

int cmd_minimize(const MinimizeArgs& a) {
  const Domain domain = load_domain(a.path);
  const CurvatureProblem problem(domain, a.kappa);
  const ParallelStructure ps = structure_for(problem);
  const MinimizerSet emax = maximal_minimizer(problem, ps);
  const MinimizerSet emin = minimal_minimizer(problem, ps);
  std::optional<MinimizerSet> chosen;
  if (a.t) chosen = interpolant(problem, ps, *a.t);
  if (a.volume) chosen = solve_for_volume(problem, ps, *a.volume);

  Json j;
  j["kappa"] = number(a.kappa);
  j["r"] = number(problem.r);
  j["h"] = number(domain.cheeger_candidate());
  j["unique"] = ps.tendrils.empty();
  j["tendrils"] = ps.tendrils.size();
  Json lengths = Json::array();
  for (const SkeletonCurve& c : ps.tendrils) lengths.push_back(number(c.length()));
  j["tendril_lengths"] = std::move(lengths);
  j["volume_interval"] = {number(emin.volume), number(emax.volume)};
  j["maximal"] = minimizer_json(emax);
  j["minimal"] = minimizer_json(emin);
  j["nested"] = sampled_nested(emin, emax, domain.polygon().bbox());
  if (chosen) j["selected"] = minimizer_json(*chosen);
  std::cout << dump(j);

  if (!a.svg.empty()) {
    std::ofstream out(a.svg);
    if (!out) throw InputError("cannot open " + a.svg + " for writing");
    SvgScene scene;
    scene.domain = &domain.polygon();
    scene.minimal = &emin.region;
    scene.maximal = &emax.region;
    if (chosen) scene.selected = &chosen->region;
    for (const SkeletonCurve& c : ps.tendrils) scene.curves.push_back(&c);
    for (const SkeletonCurve& c : ps.handles) scene.curves.push_back(&c);
    for (const SkeletonCurve& c : ps.degenerate_curves) scene.curves.push_back(&c);
    write_svg(scene, out);
  }
  return 0;
}

int cmd_profile(const std::string& path, std::size_t samples, const std::string& csv) {
  const Domain domain = load_domain(path);
  const ProfileTable table = isoperimetric_profile(domain, profile_volumes(domain, samples));
  if (csv.empty() || csv == "-") {
    write_profile_csv(table, std::cout);
    return 0;
  }
  std::ofstream out(csv);
  if (!out) throw InputError("cannot open " + csv + " for writing");
  write_profile_csv(table, out);
  Json j;
  j["rows"] = table.rows.size();
  j["v_min"] = number(table.v_min);
  j["v_max"] = number(table.v_max);
  j["h"] = number(table.h);
  j["convex"] = profile_is_convex(table);
  j["g_convex"] = g_is_convex(table);
  j["legendre_discrepancy"] = number(legendre_check(table, &domain));
  j["csv"] = csv;
  std::cout << dump(j);
  return 0;
}

int cmd_oracle(const std::string& path, double resolution, double radius, const std::string& pgm) {
  const Domain domain = load_domain(path);
  const OracleReport rep = compare_with_oracle(domain, resolution, radius);
  if (!pgm.empty()) {
    const RasterMask mask = rasterize(domain.polygon(), resolution, rep.radius);
    write_pgm(mask, pgm + "_domain.pgm");
    write_pgm(oracle_erode(mask, rep.radius), pgm + "_eroded.pgm");
  }
  std::cout << dump(oracle_report_json(rep));
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheeger sets and prescribed-curvature minimizers of simple polygons"};
  app.require_subcommand(1);

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Cheeger constant, no-neck verdicts and tendril counts");
  analyze->add_option("input", path, "polygon document (JSON or two-column text)")->required();

  MinimizeArgs margs;
  auto* minimize = app.add_subcommand("minimize", "maximal and minimal minimizers of P - kappa |F|");
  minimize->add_option("input", margs.path, "polygon document")->required();
  minimize->add_option("--kappa", margs.kappa, "curvature")->required();
  auto* vol_opt = minimize->add_option("--volume", margs.volume, "select the minimizer of this area");
  auto* t_opt = minimize->add_option("--t", margs.t, "select the interpolant A_t, t in [0, 1]");
  vol_opt->excludes(t_opt);
  minimize->add_option("--svg", margs.svg, "write an SVG figure");

  std::size_t samples = 50;
  std::string csv;
  auto* profile = app.add_subcommand("profile", "isoperimetric profile J(V) as CSV");
  profile->add_option("input", path, "polygon document")->required();
  profile->add_option("--samples", samples, "number of volume samples (>= 2)");
  profile->add_option("--csv", csv, "output path; stdout when omitted");

  double resolution = 1000.0;
  double radius = 0.0;
  std::string pgm;
  auto* oracle = app.add_subcommand("oracle", "compare the exact pipeline with the raster oracle");
  oracle->add_option("input", path, "polygon document")->required();
  oracle->add_option("--resolution", resolution, "cells per unit length");
  oracle->add_option("--radius", radius, "erosion radius; the Cheeger root when omitted");
  oracle->add_option("--pgm", pgm, "dump masks as <prefix>_domain.pgm and <prefix>_eroded.pgm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(path);
    if (*minimize) return cmd_minimize(margs);
    if (*profile) return cmd_profile(path, samples, csv);
    if (*oracle) return cmd_oracle(path, resolution, radius, pgm);
  } catch (const SubcriticalCurvature& e) {
    std::cerr << "error: empty-set minimizer: " << e.what() << '\n';
    return 3;
  } catch (const CharacterizationInapplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
