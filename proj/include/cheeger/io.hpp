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

#ifndef CHEEGER_IO_HPP_
#define CHEEGER_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cheeger/cheeger_iso.hpp"
#include "cheeger/minimizers.hpp"
#include "cheeger/parallel_structure.hpp"
#include "cheeger/polygon.hpp"
#include "cheeger/raster_oracle.hpp"

namespace cheeger {

using Json = nlohmann::ordered_json;

// Input document: {"vertices": [[x, y], ...], "name": ..., "units": ...}.
// The units tag is informational only.
struct PolygonDocument {
  std::vector<Point> vertices;
  std::string name;
  std::string units;
};

// Accepts the JSON document or whitespace-separated "x y" lines (blank
// lines and lines starting with '#' are skipped). Throws InputError.
PolygonDocument parse_polygon_document(const std::string& text);
PolygonDocument read_polygon_document(const std::string& path);
Json document_json(const PolygonDocument& doc);

// Output numbers carry 12 significant digits; non-finite values become null.
double round12(double x);
Json number(double x);
std::string dump(const Json& j);

Json minimizer_json(const MinimizerSet& set);

// Columns V,J,kappa,t,interval_flag, then "# convexity: pass|fail".
// interval_flag is "affine" inside a non-uniqueness interval, "endpoint"
// for rows interpolated towards (|domain|, P(domain)), "-" otherwise.
void write_profile_csv(const ProfileTable& table, std::ostream& out);

// Domain outline, E^m filled, E^M outlined, skeleton curves dashed. Arcs are
// emitted as SVG arc commands.
struct SvgScene {
  const JordanPolygon* domain = nullptr;
  const ArcRegion* minimal = nullptr;
  const ArcRegion* maximal = nullptr;
  const ArcRegion* selected = nullptr;
  std::vector<const SkeletonCurve*> curves;
};
void write_svg(const SvgScene& scene, std::ostream& out);
std::string svg_path(const ArcRegion& region);

// One exact-versus-raster quantity. Booleans are encoded as 0/1 and must
// match exactly (tolerance 0).
struct OracleComparison {
  std::string quantity;
  double exact = 0.0;
  double oracle = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct OracleReport {
  double resolution = 0.0;
  double radius = 0.0;
  // Tolerances are widened by max(1, 1000 / resolution).
  double tolerance_scale = 1.0;
  std::vector<OracleComparison> comparisons;
  bool all_pass() const;
};

// Areas within 2%, perimeters within 3%, the Cheeger root within 1% and the
// no-neck verdict exactly, at radius `radius` (the Cheeger root when <= 0).
OracleReport compare_with_oracle(const Domain& domain, double resolution, double radius = 0.0);
Json oracle_report_json(const OracleReport& report);

}  // namespace cheeger

#endif  // CHEEGER_IO_HPP_
