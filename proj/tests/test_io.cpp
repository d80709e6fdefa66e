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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "cheeger/cheeger_iso.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/fixtures.hpp"
#include "cheeger/io.hpp"
#include "generators.hpp"

namespace cheeger {
namespace {

std::string fixture(const std::string& file) { return std::string(CHEEGER_FIXTURE_DIR) + "/" + file; }

TEST(Document, JsonAndTextAgree) {
  const PolygonDocument j = read_polygon_document(fixture("square.json"));
  const PolygonDocument t = read_polygon_document(fixture("square.txt"));
  EXPECT_EQ(j.name, "square");
  EXPECT_EQ(j.units, "unit");
  ASSERT_EQ(j.vertices.size(), 4U);
  ASSERT_EQ(t.vertices.size(), 4U);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(j.vertices[i].x, t.vertices[i].x);
    EXPECT_EQ(j.vertices[i].y, t.vertices[i].y);
  }
}

TEST(Document, EveryFixtureFileMatchesBuiltin) {
  for (const std::string& name : fixtures::names()) {
    const PolygonDocument doc = read_polygon_document(fixture(name + ".json"));
    const JordanPolygon a(doc.vertices);
    const JordanPolygon b = fixtures::by_name(name);
    EXPECT_NEAR(a.area(), b.area(), 1e-12) << name;
    EXPECT_NEAR(a.perimeter(), b.perimeter(), 1e-12) << name;
  }
}

TEST(Document, Errors) {
  EXPECT_THROW(parse_polygon_document(""), InputError);
  EXPECT_THROW(parse_polygon_document("  \n"), InputError);
  EXPECT_THROW(parse_polygon_document("{\"vertices\": [[0, 0], [1]]}"), InputError);
  EXPECT_THROW(parse_polygon_document("{\"points\": []}"), InputError);
  EXPECT_THROW(parse_polygon_document("{\"vertices\": [[0, 0], "), InputError);
  EXPECT_THROW(parse_polygon_document("0 0\n1 0 2\n"), InputError);
  EXPECT_THROW(parse_polygon_document("0 0\n1 x\n"), InputError);
  EXPECT_THROW(read_polygon_document(fixture("does_not_exist.json")), InputError);
  const PolygonDocument c = parse_polygon_document("# c\n\n 0 0 \n1 0\n  # more\n0 1\n");
  EXPECT_EQ(c.vertices.size(), 3U);
}

TEST(Json, NumbersAndRounding) {
  EXPECT_EQ(round12(0.1 + 0.2), 0.3);
  EXPECT_EQ(round12(1.0 / 3.0), 0.333333333333);
  EXPECT_TRUE(number(std::numeric_limits<double>::infinity()).is_null());
  EXPECT_TRUE(number(std::nan("")).is_null());
  EXPECT_EQ(number(2.5).get<double>(), 2.5);
  const std::string s = dump(Json{{"a", 1}});
  EXPECT_EQ(s, "{\n  \"a\": 1\n}\n");
}

TEST(Json, MinimizerFields) {
  const Domain d(fixtures::unit_square());
  const CurvatureProblem pb(d, 5.0);
  const MinimizerSet m = maximal_minimizer(pb, structure_for(pb));
  const Json j = minimizer_json(m);
  EXPECT_EQ(j["role"], "maximal");
  EXPECT_NEAR(j["area"].get<double>(), 0.9656637061435917, 1e-12);  // 12 significant digits
  EXPECT_NEAR(j["F"].get<double>(), -1.1716814692820414, 5e-12);
  EXPECT_EQ(j["components"].get<int>(), 1);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"role", "t", "area", "perimeter", "F", "components"}));
}

TEST(Csv, KeyedProfile) {
  const Domain d(fixtures::keyed_square());
  const ProfileTable tab = isoperimetric_profile(d, profile_volumes(d, 20));
  std::ostringstream out;
  write_profile_csv(tab, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "V,J,kappa,t,interval_flag");
  std::size_t rows = 0;
  std::size_t affine = 0;
  std::string last;
  std::string tail;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      tail = line;
      continue;
    }
    ++rows;
    last = line;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4) << line;
    if (line.find(",affine") != std::string::npos) ++affine;
  }
  EXPECT_EQ(rows, tab.rows.size());
  EXPECT_GE(affine, 2U);
  EXPECT_NE(last.find(",inf,"), std::string::npos) << last;
  EXPECT_EQ(tail, "# convexity: pass");
}

TEST(Svg, KeyedScene) {
  const Domain d(fixtures::keyed_square());
  const CurvatureProblem pb(d, 10.0);
  const ParallelStructure ps = structure_for(pb);
  const MinimizerSet mx = maximal_minimizer(pb, ps);
  const MinimizerSet mn = minimal_minimizer(pb, ps);
  SvgScene scene;
  scene.domain = &d.polygon();
  scene.maximal = &mx.region;
  scene.minimal = &mn.region;
  for (const SkeletonCurve& c : ps.tendrils) scene.curves.push_back(&c);
  std::ostringstream out;
  write_svg(scene, out);
  const std::string s = out.str();
  EXPECT_EQ(s.rfind("<svg", 0) == 0 || s.rfind("<?xml", 0) == 0, true);
  EXPECT_NE(s.find("scale(1,-1)"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  const std::string p = svg_path(mx.region);
  std::size_t arcs = 0;
  for (const ArcLoop& l : mx.region.outer_loops) {
    for (const ArcEdge& e : l.edges) arcs += e.is_arc() ? 1 : 0;
  }
  EXPECT_EQ(static_cast<std::size_t>(std::count(p.begin(), p.end(), 'A')), arcs);
  EXPECT_EQ(p.front(), 'M');
}

TEST(Oracle, SquareReport) {
  const OracleReport rep = compare_with_oracle(Domain(fixtures::unit_square()), 500.0);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_NEAR(rep.radius, 1.0 / (2.0 + std::sqrt(kPi)), 1e-12);
  EXPECT_EQ(rep.tolerance_scale, 2.0);
  std::vector<std::string> names;
  for (const OracleComparison& c : rep.comparisons) names.push_back(c.quantity);
  EXPECT_EQ(names, (std::vector<std::string>{"domain_area", "domain_perimeter", "cheeger_root", "eroded_area",
                                             "no_neck", "opened_area", "opened_perimeter"}));
  const Json j = oracle_report_json(rep);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Property, DocumentRoundTrip) {
  testing::Rng rng(111);
  for (int trial = 0; trial < 100; ++trial) {
    PolygonDocument doc;
    doc.vertices = testing::random_star(rng, 3 + trial % 20, 0.3);
    doc.name = "star" + std::to_string(trial);
    const PolygonDocument back = parse_polygon_document(dump(document_json(doc)));
    ASSERT_EQ(back.name, doc.name);
    ASSERT_EQ(back.vertices.size(), doc.vertices.size());
    for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
      ASSERT_EQ(back.vertices[i].x, doc.vertices[i].x);
      ASSERT_EQ(back.vertices[i].y, doc.vertices[i].y);
    }
    std::ostringstream txt;
    txt.precision(17);
    for (const Point& v : doc.vertices) txt << v.x << ' ' << v.y << '\n';
    const PolygonDocument t = parse_polygon_document(txt.str());
    for (std::size_t i = 0; i < doc.vertices.size(); ++i) ASSERT_EQ(t.vertices[i].x, doc.vertices[i].x);
  }
}

}  // namespace
}  // namespace cheeger
