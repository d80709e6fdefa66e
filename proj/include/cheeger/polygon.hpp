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

#ifndef CHEEGER_POLYGON_HPP_
#define CHEEGER_POLYGON_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cheeger/geometry.hpp"

namespace cheeger {

// A simple polygon, oriented counterclockwise, standing in for a Jordan
// domain. Construction canonicalizes the input:
//   - coordinates are snapped to a decimal grid 10^-k chosen so that every
//     coordinate fits in 31 bits (decimal inputs such as 0.45 survive
//     exactly);
//   - repeated vertices and vertices interior to a straight run are dropped;
//   - clockwise input is reversed (reported by was_reoriented()).
// Simplicity is then checked with exact integer predicates on the grid.
class JordanPolygon {
 public:
  // Throws InputError for fewer than 3 distinct vertices, non-finite
  // coordinates, spikes or self-intersections.
  explicit JordanPolygon(std::vector<Point> vertices, std::string name = {});

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Point vertex(std::size_t i) const { return vertices_[i % size()]; }
  // Edge i runs from vertex i to vertex i + 1.
  Point edge_start(std::size_t i) const { return vertex(i); }
  Point edge_end(std::size_t i) const { return vertex(i + 1); }
  const std::string& name() const { return name_; }
  bool was_reoriented() const { return reoriented_; }

  // Integer grid coordinates (vertex * grid_scale()).
  const std::vector<std::array<std::int64_t, 2>>& grid() const { return grid_; }
  double grid_scale() const { return scale_; }

  bool is_reflex(std::size_t i) const;
  double area() const;
  double perimeter() const;
  BoundingBox bbox() const { return bbox_; }
  Tolerance tolerance() const { return Tolerance::for_diagonal(bbox_.diagonal()); }

  // Distance from p to the polygon boundary (valid anywhere in the plane).
  double distance_to_boundary(Point p) const;
  Location locate(Point p) const;
  ArcRegion as_region() const;

 private:
  std::vector<Point> vertices_;
  std::vector<std::array<std::int64_t, 2>> grid_;
  std::string name_;
  double scale_ = 1.0;
  bool reoriented_ = false;
  BoundingBox bbox_;
};

}  // namespace cheeger

#endif  // CHEEGER_POLYGON_HPP_
