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

#include "cheeger/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

using GridPoint = std::array<std::int64_t, 2>;
using Wide = __int128;

Wide orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  return Wide(b[0] - a[0]) * Wide(c[1] - a[1]) -
         Wide(b[1] - a[1]) * Wide(c[0] - a[0]);
}

int sign(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool on_segment(const GridPoint& a, const GridPoint& b, const GridPoint& p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool closed_segments_intersect(const GridPoint& a, const GridPoint& b,
                               const GridPoint& c, const GridPoint& d) {
  const int o1 = sign(orient(a, b, c));
  const int o2 = sign(orient(a, b, d));
  const int o3 = sign(orient(c, d, a));
  const int o4 = sign(orient(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

// Largest power of ten s with max_abs * s <= 2^30.
double choose_scale(double max_abs) {
  if (!(max_abs > 0.0)) return 1.0;
  const int k = static_cast<int>(std::floor(std::log10(std::ldexp(1.0, 30) / max_abs)));
  return std::pow(10.0, std::clamp(k, -12, 15));
}

}  // namespace

JordanPolygon::JordanPolygon(std::vector<Point> vertices, std::string name)
    : name_(std::move(name)) {
  double max_abs = 0.0;
  for (Point p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("polygon has non-finite coordinates");
    }
    max_abs = std::max({max_abs, std::abs(p.x), std::abs(p.y)});
  }
  scale_ = choose_scale(max_abs);

  std::vector<GridPoint> g;
  g.reserve(vertices.size());
  for (Point p : vertices) {
    GridPoint q{std::llround(p.x * scale_), std::llround(p.y * scale_)};
    if (!g.empty() && g.back() == q) continue;
    g.push_back(q);
  }
  while (g.size() > 1 && g.front() == g.back()) g.pop_back();

  // Drop vertices in the middle of straight runs; a reversal is a spike.
  bool changed = true;
  while (changed && g.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < g.size() && g.size() >= 3; ++i) {
      const GridPoint& a = g[(i + g.size() - 1) % g.size()];
      const GridPoint& b = g[i];
      const GridPoint& c = g[(i + 1) % g.size()];
      if (orient(a, b, c) != 0) continue;
      const Wide along = Wide(b[0] - a[0]) * Wide(c[0] - b[0]) +
                         Wide(b[1] - a[1]) * Wide(c[1] - b[1]);
      if (along < 0) throw InputError("polygon has a zero-width spike");
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
    }
  }
  if (g.size() < 3) {
    throw InputError("polygon needs at least 3 non-collinear vertices");
  }

  Wide twice_area = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const GridPoint& a = g[i];
    const GridPoint& b = g[(i + 1) % g.size()];
    twice_area += Wide(a[0]) * Wide(b[1]) - Wide(b[0]) * Wide(a[1]);
  }
  if (twice_area < 0) {
    std::reverse(g.begin(), g.end());
    reoriented_ = true;
  }

  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (closed_segments_intersect(g[i], g[(i + 1) % n], g[j],
                                    g[(j + 1) % n])) {
        throw InputError("polygon is not simple: edges " + std::to_string(i) +
                         " and " + std::to_string(j) + " intersect");
      }
    }
  }

  grid_ = std::move(g);
  vertices_.reserve(n);
  for (const GridPoint& q : grid_) {
    const Point p{static_cast<double>(q[0]) / scale_,
                  static_cast<double>(q[1]) / scale_};
    vertices_.push_back(p);
    bbox_.add(p);
  }
}

bool JordanPolygon::is_reflex(std::size_t i) const {
  const std::size_t n = size();
  return orient(grid_[(i + n - 1) % n], grid_[i % n], grid_[(i + 1) % n]) < 0;
}

double JordanPolygon::area() const {
  double a = 0.0;
  for (std::size_t i = 0; i < size(); ++i) a += cross(vertex(i), vertex(i + 1));
  return 0.5 * a;
}

double JordanPolygon::perimeter() const {
  double p = 0.0;
  for (std::size_t i = 0; i < size(); ++i) p += distance(vertex(i), vertex(i + 1));
  return p;
}

double JordanPolygon::distance_to_boundary(Point p) const {
  double d = INFINITY;
  for (std::size_t i = 0; i < size(); ++i) {
    d = std::min(d, point_segment_distance(p, vertex(i), vertex(i + 1)));
  }
  return d;
}

Location JordanPolygon::locate(Point p) const {
  if (distance_to_boundary(p) <= tolerance().geom) return Location::boundary;
  bool inside = false;
  for (std::size_t i = 0, j = size() - 1; i < size(); j = i++) {
    const Point a = vertices_[i];
    const Point b = vertices_[j];
    if ((a.y > p.y) != (b.y > p.y) &&
        p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
      inside = !inside;
    }
  }
  return inside ? Location::inside : Location::outside;
}

ArcRegion JordanPolygon::as_region() const { return polygon_region(vertices_); }

}  // namespace cheeger
