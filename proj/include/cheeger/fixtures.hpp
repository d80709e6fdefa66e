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

#ifndef CHEEGER_FIXTURES_HPP_
#define CHEEGER_FIXTURES_HPP_

#include <string>
#include <vector>

#include "cheeger/polygon.hpp"

namespace cheeger::fixtures {

JordanPolygon unit_square();
JordanPolygon rectangle();  // 2 x 1
// Regular 720-gon inscribed in the unit circle.
JordanPolygon disk();
// Equilateral, side 1.
JordanPolygon triangle();
// Two unit squares joined by the corridor [1, 1.5] x [0.45, 0.55].
JordanPolygon dumbbell();
// Unit square with the corridor [1, 1.6] x [0.4, 0.6]. At r = 0.1 the
// corridor carries a tendril of length 0.5.
JordanPolygon keyed_square();
// Same with the shorter corridor [1, 1.5] x [0.4, 0.6] (tendril length 0.4).
JordanPolygon keyed_square_short();
// Two-step staircase: a 1 x 0.5 block on a 2 x 0.25 step on a 2.5 x 0.25
// base. The steps carry tendrils at r = 0.25 and r = 0.125.
JordanPolygon ziggurat();

std::vector<std::string> names();
// Throws InputError for an unknown name.
JordanPolygon by_name(const std::string& name);

}  // namespace cheeger::fixtures

#endif  // CHEEGER_FIXTURES_HPP_
