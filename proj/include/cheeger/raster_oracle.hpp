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

#ifndef CHEEGER_RASTER_ORACLE_HPP_
#define CHEEGER_RASTER_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cheeger/polygon.hpp"

namespace cheeger {

// Brute-force pixel model of a planar set, used to cross-check the exact
// pipeline. Cell (i, j) is centered at origin + ((i + 0.5), (j + 0.5)) * cell_size.
struct RasterMask {
  double resolution = 0.0;  // cells per unit length
  Point origin;
  double cell_size = 0.0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> bits;  // row-major, j * width + i
  bool warning = false;            // rasterization lost most of the input

  bool at(std::size_t i, std::size_t j) const { return bits[j * width + i] != 0; }
  Point center(std::size_t i, std::size_t j) const;
  std::size_t count() const;
  double area() const { return static_cast<double>(count()) * cell_size * cell_size; }
  bool empty() const { return count() == 0; }
  // Number of 4-connected components of set cells.
  std::size_t component_count() const;
};

// Cell centers inside the polygon (even-odd). The bounding box is padded
// by 2 * r_max plus two cells. Throws DomainError when fewer than 64 cells
// span the bounding-box diagonal.
RasterMask rasterize(const JordanPolygon& polygon, double resolution, double r_max = 0.0);

// Euclidean distance, in length units, from each cell center to the
// nearest unset cell center (0 on unset cells). Exact: squared distances
// are integers in cell units.
std::vector<double> distance_to_unset(const RasterMask& mask);

RasterMask oracle_erode(const RasterMask& mask, double r);
RasterMask oracle_dilate(const RasterMask& mask, double r);
RasterMask oracle_open(const RasterMask& mask, double r);
bool oracle_no_neck(const RasterMask& mask, double r);

// Length of the 0.5 level line of the mask smoothed by a Gaussian of 1.5
// cells. Throws DomainError on an empty mask.
double oracle_perimeter(const RasterMask& mask);

struct OracleCheeger {
  double r = 0.0;
  double h = 0.0;
};

// Root of pi r^2 = |eroded mask at r| by bisection on raster areas.
OracleCheeger oracle_cheeger(const RasterMask& mask);

// Binary portable graymap (P5), set cells white, top row first.
void write_pgm(const RasterMask& mask, const std::string& path);

}  // namespace cheeger

#endif  // CHEEGER_RASTER_ORACLE_HPP_
