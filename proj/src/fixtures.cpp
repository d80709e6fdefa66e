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

#include "cheeger/fixtures.hpp"

#include <cmath>

#include "cheeger/errors.hpp"

namespace cheeger::fixtures {

JordanPolygon unit_square() { return JordanPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, "square"); }

JordanPolygon rectangle() { return JordanPolygon({{0, 0}, {2, 0}, {2, 1}, {0, 1}}, "rectangle"); }

JordanPolygon disk() {
  std::vector<Point> v;
  for (int i = 0; i < 720; ++i) v.push_back(unit_at_angle(kTwoPi * i / 720.0));
  return JordanPolygon(std::move(v), "disk");
}

JordanPolygon triangle() { return JordanPolygon({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}}, "triangle"); }

JordanPolygon dumbbell() {
  return JordanPolygon({{0, 0},
                        {1, 0},
                        {1, 0.45},
                        {1.5, 0.45},
                        {1.5, 0},
                        {2.5, 0},
                        {2.5, 1},
                        {1.5, 1},
                        {1.5, 0.55},
                        {1, 0.55},
                        {1, 1},
                        {0, 1}},
                       "dumbbell");
}

JordanPolygon keyed_square() {
  return JordanPolygon({{0, 0}, {1, 0}, {1, 0.4}, {1.6, 0.4}, {1.6, 0.6}, {1, 0.6}, {1, 1}, {0, 1}}, "keyed");
}

JordanPolygon keyed_square_short() {
  return JordanPolygon({{0, 0}, {1, 0}, {1, 0.4}, {1.5, 0.4}, {1.5, 0.6}, {1, 0.6}, {1, 1}, {0, 1}}, "keyed_short");
}

JordanPolygon ziggurat() {
  return JordanPolygon({{-1.25, 0},
                        {1.25, 0},
                        {1.25, 0.25},
                        {1, 0.25},
                        {1, 0.5},
                        {0.5, 0.5},
                        {0.5, 1},
                        {-0.5, 1},
                        {-0.5, 0.5},
                        {-1, 0.5},
                        {-1, 0.25},
                        {-1.25, 0.25}},
                       "ziggurat");
}

std::vector<std::string> names() {
  return {"square", "rectangle", "disk", "triangle", "dumbbell", "keyed", "keyed_short", "ziggurat"};
}

JordanPolygon by_name(const std::string& name) {
  if (name == "square") return unit_square();
  if (name == "rectangle") return rectangle();
  if (name == "disk") return disk();
  if (name == "triangle") return triangle();
  if (name == "dumbbell") return dumbbell();
  if (name == "keyed") return keyed_square();
  if (name == "keyed_short") return keyed_square_short();
  if (name == "ziggurat") return ziggurat();
  throw InputError("unknown fixture " + name);
}

}  // namespace cheeger::fixtures
