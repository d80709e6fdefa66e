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

#include "cheeger/geometry.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "cheeger/errors.hpp"

namespace cheeger {

double ccw_angle(Point from, Point to) {
  double a = std::atan2(cross(from, to), dot(from, to));
  if (a < 0.0) a += kTwoPi;
  return a >= kTwoPi ? 0.0 : a;
}

Point closest_on_segment(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return a + t * d;
}

double point_segment_distance(Point p, Point a, Point b) {
  return distance(p, closest_on_segment(p, a, b));
}

void BoundingBox::add(Point p) {
  lo.x = std::min(lo.x, p.x);
  lo.y = std::min(lo.y, p.y);
  hi.x = std::max(hi.x, p.x);
  hi.y = std::max(hi.y, p.y);
}

void BoundingBox::add(const BoundingBox& b) {
  if (b.empty()) return;
  add(b.lo);
  add(b.hi);
}

void BoundingBox::inflate(double d) {
  lo.x -= d;
  lo.y -= d;
  hi.x += d;
  hi.y += d;
}

bool BoundingBox::overlaps(const BoundingBox& o) const {
  return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y;
}

// ---------------------------------------------------------------------------
// ArcEdge

ArcEdge ArcEdge::segment(Point start, Point end) {
  ArcEdge e;
  e.kind_ = Kind::segment;
  e.start_ = start;
  e.end_ = end;
  return e;
}

ArcEdge ArcEdge::arc(Point start, Point end, Point center, double radius,
                     Orientation orientation) {
  ArcEdge e;
  e.kind_ = Kind::arc;
  e.start_ = start;
  e.end_ = end;
  e.center_ = center;
  e.radius_ = radius;
  e.orientation_ = orientation;
  const Point a = start - center;
  const Point b = end - center;
  double sweep = orientation == Orientation::ccw ? ccw_angle(a, b)
                                                 : ccw_angle(b, a);
  if (sweep > kTwoPi - 1e-12) sweep = 0.0;
  e.sweep_ = sweep;
  e.start_angle_ = std::atan2(a.y, a.x);
  return e;
}

ArcEdge ArcEdge::arc_by_angle(Point center, double radius, double start_angle,
                              double sweep, Orientation orientation) {
  ArcEdge e;
  e.kind_ = Kind::arc;
  e.center_ = center;
  e.radius_ = radius;
  e.orientation_ = orientation;
  e.sweep_ = sweep;
  e.start_angle_ = start_angle;
  const double sign = orientation == Orientation::ccw ? 1.0 : -1.0;
  e.start_ = center + radius * unit_at_angle(start_angle);
  e.end_ = center + radius * unit_at_angle(start_angle + sign * sweep);
  return e;
}

double ArcEdge::length() const {
  return is_arc() ? radius_ * sweep_ : distance(start_, end_);
}

Point ArcEdge::point_at(double s) const {
  if (s <= 0.0) return start_;
  if (s >= 1.0) return end_;
  if (!is_arc()) return start_ + s * (end_ - start_);
  const double sign = orientation_ == Orientation::ccw ? 1.0 : -1.0;
  return center_ + radius_ * unit_at_angle(start_angle_ + sign * s * sweep_);
}

Point ArcEdge::tangent_at(double s) const {
  if (!is_arc()) return normalized(end_ - start_);
  const double sign = orientation_ == Orientation::ccw ? 1.0 : -1.0;
  const Point u = unit_at_angle(start_angle_ + sign * s * sweep_);
  return sign * perp(u);
}

Point ArcEdge::outward_normal_at(double s) const {
  const Point t = tangent_at(s);
  return {t.y, -t.x};
}

ArcEdge ArcEdge::reversed() const {
  if (!is_arc()) return segment(end_, start_);
  ArcEdge e = *this;
  e.start_ = end_;
  e.end_ = start_;
  e.orientation_ =
      orientation_ == Orientation::ccw ? Orientation::cw : Orientation::ccw;
  const Point a = end_ - center_;
  e.start_angle_ = std::atan2(a.y, a.x);
  return e;
}

bool ArcEdge::covers_angle_of(Point p, double angular_tol) const {
  const Point a = start_ - center_;
  const Point v = p - center_;
  const double delta = orientation_ == Orientation::ccw ? ccw_angle(a, v)
                                                        : ccw_angle(v, a);
  return delta <= sweep_ + angular_tol || delta >= kTwoPi - angular_tol;
}

double ArcEdge::distance_to(Point p) const {
  if (!is_arc()) return point_segment_distance(p, start_, end_);
  const double dc = distance(p, center_);
  if (dc > 0.0 && covers_angle_of(p)) return std::abs(dc - radius_);
  if (dc == 0.0) return radius_;
  return std::min(distance(p, start_), distance(p, end_));
}

BoundingBox ArcEdge::bbox() const {
  BoundingBox b;
  b.add(start_);
  b.add(end_);
  if (is_arc()) {
    const std::array<Point, 4> dirs{Point{1, 0}, Point{0, 1}, Point{-1, 0},
                                    Point{0, -1}};
    for (Point d : dirs) {
      const Point q = center_ + radius_ * d;
      if (covers_angle_of(q)) b.add(q);
    }
  }
  return b;
}

double ArcEdge::area_term() const {
  double a = 0.5 * cross(start_, end_);
  if (is_arc()) {
    const double seg =
        0.5 * radius_ * radius_ * (sweep_ - std::sin(sweep_));
    a += orientation_ == Orientation::ccw ? seg : -seg;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Loops and regions

double signed_area(const ArcLoop& loop) {
  double a = 0.0;
  for (const ArcEdge& e : loop.edges) a += e.area_term();
  return a;
}

double length(const ArcLoop& loop) {
  double l = 0.0;
  for (const ArcEdge& e : loop.edges) l += e.length();
  return l;
}

BoundingBox bbox(const ArcLoop& loop) {
  BoundingBox b;
  for (const ArcEdge& e : loop.edges) b.add(e.bbox());
  return b;
}

BoundingBox bbox(const ArcRegion& region) {
  BoundingBox b;
  for (const ArcLoop& l : region.outer_loops) b.add(bbox(l));
  for (const ArcLoop& l : region.hole_loops) b.add(bbox(l));
  return b;
}

bool is_closed(const ArcLoop& loop, double tol) {
  const auto& es = loop.edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const ArcEdge& next = es[(i + 1) % es.size()];
    if (distance(es[i].end(), next.start()) > tol) return false;
  }
  return !es.empty();
}

Tolerance tolerance_for(const ArcRegion& region) {
  return Tolerance::for_diagonal(bbox(region).diagonal());
}

namespace {

void validate_loop(const ArcLoop& loop, double tol) {
  if (loop.edges.empty()) throw StructuralError("empty loop");
  for (const ArcEdge& e : loop.edges) {
    if (!e.is_arc()) {
      if (e.start() == e.end()) throw StructuralError("zero-length segment");
      continue;
    }
    if (!(e.radius() > 0.0)) throw StructuralError("arc with radius <= 0");
    if (std::abs(distance(e.start(), e.center()) - e.radius()) > tol ||
        std::abs(distance(e.end(), e.center()) - e.radius()) > tol) {
      throw StructuralError("arc endpoint off its circle");
    }
  }
  if (!is_closed(loop, tol)) throw StructuralError("loop is not a closed chain");
}

}  // namespace

void validate(const ArcRegion& region) {
  if (region.outer_loops.empty()) throw StructuralError("region has no loops");
  const double tol = tolerance_for(region).geom;
  for (const ArcLoop& l : region.outer_loops) validate_loop(l, tol);
  for (const ArcLoop& l : region.hole_loops) validate_loop(l, tol);
}

double area(const ArcRegion& region) {
  validate(region);
  double a = 0.0;
  for (const ArcLoop& l : region.outer_loops) a += signed_area(l);
  for (const ArcLoop& l : region.hole_loops) a += signed_area(l);
  return a;
}

double perimeter(const ArcRegion& region) {
  validate(region);
  double p = 0.0;
  for (const ArcLoop& l : region.outer_loops) p += length(l);
  for (const ArcLoop& l : region.hole_loops) p += length(l);
  return p;
}

double distance_to_boundary(const ArcRegion& region, Point p) {
  double d = INFINITY;
  for (const auto* loops : {&region.outer_loops, &region.hole_loops}) {
    for (const ArcLoop& l : *loops) {
      for (const ArcEdge& e : l.edges) d = std::min(d, e.distance_to(p));
    }
  }
  return d;
}

namespace {

int chord_crossing(Point a, Point b, Point p) {
  const double side = cross(b - a, p - a);
  if (a.y <= p.y) return (b.y > p.y && side > 0.0) ? 1 : 0;
  return (b.y <= p.y && side < 0.0) ? -1 : 0;
}

// Winding contribution of an arc: its chord plus the circular segment
// between chord and arc. A point lying on the chord is resolved by halving
// the arc.
int arc_winding(const ArcEdge& e, Point p, int depth) {
  const Point a = e.start();
  const Point b = e.end();
  const bool in_circle = distance(p, e.center()) < e.radius();
  const double side = cross(b - a, p - a);
  const double chord = distance(a, b);
  if (in_circle && depth < 60 &&
      std::abs(side) <= 1e-12 * chord * std::max(chord, distance(p, a))) {
    const Point m = e.point_at(0.5);
    return arc_winding(ArcEdge::arc(a, m, e.center(), e.radius(), e.orientation()), p, depth + 1) +
           arc_winding(ArcEdge::arc(m, b, e.center(), e.radius(), e.orientation()), p, depth + 1);
  }
  int w = chord_crossing(a, b, p);
  if (in_circle) {
    const double arc_side = cross(b - a, e.point_at(0.5) - a);
    if ((side > 0.0 && arc_side > 0.0) || (side < 0.0 && arc_side < 0.0)) {
      w += e.orientation() == Orientation::ccw ? 1 : -1;
    }
  }
  return w;
}

int winding_number(const ArcLoop& loop, Point p) {
  int w = 0;
  for (const ArcEdge& e : loop.edges) {
    w += e.is_arc() ? arc_winding(e, p, 0) : chord_crossing(e.start(), e.end(), p);
  }
  return w;
}

}  // namespace

Location contains_point(const ArcRegion& region, Point p) {
  const double tol = tolerance_for(region).geom;
  if (distance_to_boundary(region, p) <= tol) return Location::boundary;
  int w = 0;
  for (const ArcLoop& l : region.outer_loops) w += winding_number(l, p);
  for (const ArcLoop& l : region.hole_loops) w += winding_number(l, p);
  return w != 0 ? Location::inside : Location::outside;
}

// ---------------------------------------------------------------------------
// Crossing detection

namespace {

bool near_endpoint(Point x, const ArcEdge& e, double tol) {
  return distance(x, e.start()) <= tol || distance(x, e.end()) <= tol;
}

bool proper(Point x, const ArcEdge& a, const ArcEdge& b, double tol) {
  return !near_endpoint(x, a, tol) && !near_endpoint(x, b, tol);
}

bool segments_cross(const ArcEdge& a, const ArcEdge& b, double tol) {
  const Point p = a.start();
  const Point r = a.end() - p;
  const Point q = b.start();
  const Point s = b.end() - q;
  const double denom = cross(r, s);
  const double lr = norm(r);
  const double ls = norm(s);
  if (std::abs(denom) <= 1e-14 * lr * ls) {
    // Parallel: only a collinear overlap of positive length counts.
    if (std::abs(cross(r, q - p)) / lr > tol) return false;
    const Point u = r / lr;
    double t0 = dot(q - p, u);
    double t1 = dot(b.end() - p, u);
    if (t0 > t1) std::swap(t0, t1);
    return std::min(lr, t1) - std::max(0.0, t0) > tol;
  }
  const double t = cross(q - p, s) / denom;
  const double u = cross(q - p, r) / denom;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return false;
  return proper(p + t * r, a, b, tol);
}

bool segment_arc_cross(const ArcEdge& seg, const ArcEdge& arc, double tol) {
  const Point a = seg.start();
  const Point d = seg.end() - a;
  const Point f = a - arc.center();
  const double A = dot(d, d);
  const double B = 2.0 * dot(f, d);
  const double C = dot(f, f) - arc.radius() * arc.radius();
  const double line_dist = std::abs(cross(d, arc.center() - a)) / std::sqrt(A);
  if (std::abs(line_dist - arc.radius()) <= tol) return false;  // tangency
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return false;
  const double sq = std::sqrt(disc);
  for (double t : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)}) {
    if (t < 0.0 || t > 1.0) continue;
    const Point x = a + t * d;
    if (arc.covers_angle_of(x) && proper(x, seg, arc, tol)) return true;
  }
  return false;
}

bool arcs_cross(const ArcEdge& a, const ArcEdge& b, double tol) {
  const Point dc = b.center() - a.center();
  const double d = norm(dc);
  const double r1 = a.radius();
  const double r2 = b.radius();
  if (d <= tol) {
    if (std::abs(r1 - r2) > tol) return false;
    // Same circle: overlapping angular ranges are a crossing.
    const Point ma = a.point_at(0.5);
    const Point mb = b.point_at(0.5);
    return (b.covers_angle_of(ma) && proper(ma, a, b, tol)) ||
           (a.covers_angle_of(mb) && proper(mb, a, b, tol));
  }
  if (d > r1 + r2 + tol || d < std::abs(r1 - r2) - tol) return false;
  if (std::abs(d - (r1 + r2)) <= tol || std::abs(d - std::abs(r1 - r2)) <= tol)
    return false;  // tangency
  const double x = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, r1 * r1 - x * x));
  const Point u = dc / d;
  const Point base = a.center() + x * u;
  for (double sgn : {-1.0, 1.0}) {
    const Point p = base + sgn * h * perp(u);
    if (a.covers_angle_of(p) && b.covers_angle_of(p) && proper(p, a, b, tol))
      return true;
  }
  return false;
}

bool edges_cross(const ArcEdge& a, const ArcEdge& b, double tol) {
  if (!a.is_arc() && !b.is_arc()) return segments_cross(a, b, tol);
  if (!a.is_arc()) return segment_arc_cross(a, b, tol);
  if (!b.is_arc()) return segment_arc_cross(b, a, tol);
  return arcs_cross(a, b, tol);
}

}  // namespace

bool has_crossing(const std::vector<const ArcLoop*>& loops, double tol) {
  std::vector<const ArcEdge*> edges;
  std::vector<BoundingBox> boxes;
  for (const ArcLoop* l : loops) {
    for (const ArcEdge& e : l->edges) {
      edges.push_back(&e);
      BoundingBox b = e.bbox();
      b.inflate(tol);
      boxes.push_back(b);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!boxes[i].overlaps(boxes[j])) continue;
      if (edges_cross(*edges[i], *edges[j], tol)) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Offsets and dilations

namespace {

constexpr double kTangentAngle = 1e-9;
constexpr double kCuspSlack = 1e-6;

void push_ccw_arc(std::vector<ArcEdge>& out, Point center, double r,
                  Point from_dir, double sweep) {
  const double a0 = std::atan2(from_dir.y, from_dir.x);
  if (sweep > kPi) {
    out.push_back(ArcEdge::arc_by_angle(center, r, a0, 0.5 * sweep,
                                        Orientation::ccw));
    out.push_back(ArcEdge::arc_by_angle(center, r, a0 + 0.5 * sweep,
                                        0.5 * sweep, Orientation::ccw));
  } else {
    out.push_back(
        ArcEdge::arc_by_angle(center, r, a0, sweep, Orientation::ccw));
  }
}

}  // namespace

ArcLoop offset_walk(const ArcLoop& walk, double r, double tol) {
  if (walk.edges.empty()) throw DomainError("offset of an empty walk");
  if (!(r > 0.0)) throw DomainError("offset radius must be positive");
  const auto& es = walk.edges;
  const std::size_t n = es.size();
  ArcLoop out;
  for (std::size_t i = 0; i < n; ++i) {
    const ArcEdge& prev = es[(i + n - 1) % n];
    const ArcEdge& cur = es[i];
    const Point n1 = prev.outward_normal_at(1.0);
    const Point n2 = cur.outward_normal_at(0.0);
    const double sweep = ccw_angle(n1, n2);
    if (sweep > kTangentAngle && sweep < kTwoPi - kTangentAngle) {
      if (sweep > kPi + kCuspSlack) {
        throw ReachViolation("concave corner in offset base");
      }
      push_ccw_arc(out.edges, cur.start(), r, n1, sweep);
    }
    if (!cur.is_arc()) {
      const Point n = cur.outward_normal_at(0.0);
      out.edges.push_back(
          ArcEdge::segment(cur.start() + r * n, cur.end() + r * n));
    } else if (cur.orientation() == Orientation::ccw) {
      out.edges.push_back(ArcEdge::arc(
          cur.start() + r * n2, cur.end() + r * cur.outward_normal_at(1.0),
          cur.center(), cur.radius() + r, Orientation::ccw));
    } else {
      const double rho = cur.radius() - r;
      if (rho < -tol) {
        throw ReachViolation("concave arc tighter than the offset radius");
      }
      if (rho > tol) {
        out.edges.push_back(ArcEdge::arc(
            cur.start() + r * n2, cur.end() + r * cur.outward_normal_at(1.0),
            cur.center(), rho, Orientation::cw));
      }
    }
  }
  if (has_crossing({&out}, tol)) {
    throw ReachViolation("offset boundary self-intersects");
  }
  return out;
}

ArcRegion dilate_by_disk(const ArcRegion& base, double r) {
  if (!base.hole_loops.empty()) {
    throw DomainError("dilation of regions with holes is not supported");
  }
  validate(base);
  BoundingBox b = bbox(base);
  b.inflate(r);
  const double tol = Tolerance::for_diagonal(b.diagonal()).geom;
  ArcRegion out;
  for (const ArcLoop& l : base.outer_loops) {
    out.outer_loops.push_back(offset_walk(l, r, tol));
  }
  std::vector<const ArcLoop*> loops;
  for (const ArcLoop& l : out.outer_loops) loops.push_back(&l);
  if (loops.size() > 1 && has_crossing(loops, tol)) {
    throw ReachViolation("dilated components overlap");
  }
  return out;
}

ArcRegion dilate_by_disk(std::span<const Point> curve, double r) {
  if (curve.empty()) throw DomainError("dilation of an empty curve");
  if (!(r > 0.0)) throw DomainError("offset radius must be positive");
  ArcLoop walk;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    if (curve[i] == curve[i + 1]) continue;
    walk.edges.push_back(ArcEdge::segment(curve[i], curve[i + 1]));
  }
  if (walk.edges.empty()) return dilate_by_disk(curve.front(), r);
  for (std::size_t i = walk.edges.size(); i-- > 0;) {
    walk.edges.push_back(walk.edges[i].reversed());
  }
  BoundingBox b = bbox(walk);
  b.inflate(r);
  ArcRegion out;
  out.outer_loops.push_back(
      offset_walk(walk, r, Tolerance::for_diagonal(b.diagonal()).geom));
  return out;
}

ArcRegion dilate_by_disk(Point p, double r) {
  if (!(r > 0.0)) throw DomainError("offset radius must be positive");
  return disk_region(p, r);
}

ArcRegion polygon_region(std::span<const Point> ccw_vertices) {
  ArcLoop loop;
  const std::size_t n = ccw_vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    loop.edges.push_back(
        ArcEdge::segment(ccw_vertices[i], ccw_vertices[(i + 1) % n]));
  }
  ArcRegion region;
  region.outer_loops.push_back(std::move(loop));
  return region;
}

ArcRegion disk_region(Point center, double radius) {
  ArcLoop loop;
  loop.edges.push_back(
      ArcEdge::arc_by_angle(center, radius, 0.0, kPi, Orientation::ccw));
  loop.edges.push_back(
      ArcEdge::arc_by_angle(center, radius, kPi, kPi, Orientation::ccw));
  ArcRegion region;
  region.outer_loops.push_back(std::move(loop));
  return region;
}

}  // namespace cheeger
