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

#ifndef CHEEGER_GEOMETRY_HPP_
#define CHEEGER_GEOMETRY_HPP_

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace cheeger {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Relative tolerances, scaled by the bounding-box diagonal of the input.
inline constexpr double kGeomRelTol = 1e-9;
inline constexpr double kDegRelTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point& operator+=(Point o) { x += o.x; y += o.y; return *this; }
  Point& operator-=(Point o) { x -= o.x; y -= o.y; return *this; }
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
// Rotation by +90 degrees.
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point normalized(Point a) { return a / norm(a); }
inline Point unit_at_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Counterclockwise rotation angle taking direction `from` onto direction
// `to`, in [0, 2pi).
double ccw_angle(Point from, Point to);

// Distance from p to the closed segment [a, b].
double point_segment_distance(Point p, Point a, Point b);
// Closest point of the closed segment [a, b] to p.
Point closest_on_segment(Point p, Point a, Point b);

struct BoundingBox {
  Point lo{INFINITY, INFINITY};
  Point hi{-INFINITY, -INFINITY};

  void add(Point p);
  void add(const BoundingBox& b);
  void inflate(double d);
  bool empty() const { return lo.x > hi.x; }
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double diagonal() const { return empty() ? 0.0 : std::hypot(width(), height()); }
  bool overlaps(const BoundingBox& o) const;
};

// The two scale-relative tolerances used throughout: `geom` for chain
// closure, tangency and boundary classification; `deg` for separating
// degenerate (curve) pieces of an inner parallel set from fat ones.
struct Tolerance {
  double geom = 0.0;
  double deg = 0.0;

  static Tolerance for_diagonal(double diagonal) {
    return {kGeomRelTol * diagonal, kDegRelTol * diagonal};
  }
};

enum class Orientation { ccw, cw };

// A line segment or a circular arc with explicit center and radius.
class ArcEdge {
 public:
  enum class Kind { segment, arc };

  static ArcEdge segment(Point start, Point end);
  // Arc from `start` to `end` turning around `center` in the given
  // direction. The sweep is recovered from the endpoints, so it is in
  // [0, 2pi); sweeps within 1e-12 of 2pi are read as 0.
  static ArcEdge arc(Point start, Point end, Point center, double radius,
                     Orientation orientation);
  // Arc given by its start angle and unsigned sweep.
  static ArcEdge arc_by_angle(Point center, double radius, double start_angle,
                              double sweep, Orientation orientation);

  Kind kind() const { return kind_; }
  bool is_arc() const { return kind_ == Kind::arc; }
  Point start() const { return start_; }
  Point end() const { return end_; }
  Point center() const { return center_; }
  double radius() const { return radius_; }
  Orientation orientation() const { return orientation_; }
  // Unsigned turning angle of an arc; 0 for segments.
  double sweep() const { return sweep_; }

  double length() const;
  Point point_at(double s) const;
  // Unit direction of travel at parameter s in [0, 1].
  Point tangent_at(double s) const;
  // Right-hand normal; for a counterclockwise loop this points outward.
  Point outward_normal_at(double s) const;
  ArcEdge reversed() const;
  double distance_to(Point p) const;
  BoundingBox bbox() const;
  // Contribution of this edge to the enclosed signed area (Green).
  double area_term() const;
  // True when p (assumed on the supporting circle) lies within the arc's
  // angular range.
  bool covers_angle_of(Point p, double angular_tol = 0.0) const;

 private:
  Kind kind_ = Kind::segment;
  Point start_;
  Point end_;
  Point center_;
  double radius_ = 0.0;
  Orientation orientation_ = Orientation::ccw;
  double sweep_ = 0.0;
  double start_angle_ = 0.0;
};

struct ArcLoop {
  std::vector<ArcEdge> edges;
};

// Region bounded by closed chains of segments and arcs. Outer loops are
// counterclockwise, hole loops clockwise.
struct ArcRegion {
  std::vector<ArcLoop> outer_loops;
  std::vector<ArcLoop> hole_loops;
};

enum class Location { inside, boundary, outside };

double signed_area(const ArcLoop& loop);
double length(const ArcLoop& loop);
BoundingBox bbox(const ArcLoop& loop);
BoundingBox bbox(const ArcRegion& region);
bool is_closed(const ArcLoop& loop, double tol);
Tolerance tolerance_for(const ArcRegion& region);

// Throws StructuralError when a loop is empty or not a closed chain, an
// edge is degenerate, or an arc endpoint is off its circle.
void validate(const ArcRegion& region);

double area(const ArcRegion& region);
double perimeter(const ArcRegion& region);
Location contains_point(const ArcRegion& region, Point p);
double distance_to_boundary(const ArcRegion& region, Point p);

// True when two non-adjacent parts of the loops cross or overlap. Touching
// at a single point (tangency, shared vertices) is not a crossing.
bool has_crossing(const std::vector<const ArcLoop*>& loops, double tol);

// Outward offset of a closed counterclockwise walk by a disk of radius r.
// The walk may be weakly simple: spikes that run out and back along the same
// curve are allowed and become stadium-shaped fingers. Clockwise arcs of
// radius r collapse to their centers. Throws ReachViolation on a concave
// corner, a clockwise arc of radius < r, or a self-crossing result.
ArcLoop offset_walk(const ArcLoop& walk, double r, double tol);

// Minkowski sums with the closed disk of radius r.
ArcRegion dilate_by_disk(const ArcRegion& base, double r);
// `curve` is an open polyline; a single point yields a disk.
ArcRegion dilate_by_disk(std::span<const Point> curve, double r);
ArcRegion dilate_by_disk(Point p, double r);

ArcRegion polygon_region(std::span<const Point> ccw_vertices);
ArcRegion disk_region(Point center, double radius);

}  // namespace cheeger

#endif  // CHEEGER_GEOMETRY_HPP_
