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

#include "cheeger/medial_axis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include <boost/polygon/voronoi.hpp>

#include "cheeger/errors.hpp"

namespace {

struct GridPoint {
  int x;
  int y;
};

struct GridSegment {
  GridPoint a;
  GridPoint b;
};

}  // namespace

namespace boost::polygon {

template <>
struct geometry_concept<GridPoint> {
  using type = point_concept;
};

template <>
struct point_traits<GridPoint> {
  using coordinate_type = int;
  static int get(const GridPoint& p, orientation_2d o) { return o == HORIZONTAL ? p.x : p.y; }
};

template <>
struct geometry_concept<GridSegment> {
  using type = segment_concept;
};

template <>
struct segment_traits<GridSegment> {
  using coordinate_type = int;
  using point_type = GridPoint;
  static GridPoint get(const GridSegment& s, direction_1d d) { return d.to_int() ? s.b : s.a; }
};

}  // namespace boost::polygon

namespace cheeger {

namespace bp = boost::polygon;
using VoronoiDiagram = bp::voronoi_diagram<double>;
using VoronoiEdge = VoronoiDiagram::edge_type;
using VoronoiCell = VoronoiDiagram::cell_type;
using VoronoiVertex = VoronoiDiagram::vertex_type;

namespace {

double parabola_height(const MedialEdge& e, double u) {
  const Point rel = e.focus - e.origin;
  const double uf = dot(rel, e.axis);
  const double df = dot(rel, e.normal);
  const double w = u - uf;
  return (w * w + df * df) / (2.0 * df);
}

Point parabola_point(const MedialEdge& e, double u) {
  return e.origin + e.axis * u + e.normal * parabola_height(e, u);
}

// Arc length primitive of the parabola in the variable u.
double parabola_primitive(const MedialEdge& e, double u) {
  const Point rel = e.focus - e.origin;
  const double uf = dot(rel, e.axis);
  const double df = dot(rel, e.normal);
  const double x = (u - uf) / df;
  return 0.5 * df * (x * std::sqrt(1.0 + x * x) + std::asinh(x));
}

bool is_point_site(const MedialSite& s) { return s.kind == MedialSite::Kind::reflex_vertex; }

}  // namespace

class MedialBuilder {
 public:
  explicit MedialBuilder(const JordanPolygon& polygon) : graph_(new MedialGraph(polygon)) {}

  std::shared_ptr<const MedialGraph> run() {
    extract();
    split_at_minima();
    finish();
    return std::shared_ptr<const MedialGraph>(graph_.release());
  }

 private:
  const JordanPolygon& poly() const { return graph_->polygon_; }

  MedialSite site_of(const VoronoiCell& cell) const {
    const std::size_t n = poly().size();
    const std::size_t i = cell.source_index();
    if (cell.contains_segment()) return {MedialSite::Kind::polygon_edge, i};
    if (cell.source_category() == bp::SOURCE_CATEGORY_SEGMENT_START_POINT) {
      return {MedialSite::Kind::reflex_vertex, i};
    }
    return {MedialSite::Kind::reflex_vertex, (i + 1) % n};
  }

  // Fills in curve data for an edge from p0 to p1 separating two sites.
  MedialEdge make_edge(Point p0, Point p1, MedialSite left, MedialSite right) const {
    MedialEdge e;
    e.left = left;
    e.right = right;
    if (is_point_site(left) == is_point_site(right)) {
      e.curve = MedialEdge::Curve::line;
      e.origin = p0;
      e.axis = p1 - p0;
      return e;
    }
    const MedialSite point_site = is_point_site(left) ? left : right;
    const MedialSite line_site = is_point_site(left) ? right : left;
    e.curve = MedialEdge::Curve::parabola;
    e.focus = poly().vertex(point_site.index);
    e.origin = poly().edge_start(line_site.index);
    e.axis = normalized(poly().edge_end(line_site.index) - e.origin);
    e.normal = perp(e.axis);
    if (dot(e.focus - e.origin, e.normal) < 0.0) e.normal = -e.normal;
    e.u0 = dot(p0 - e.origin, e.axis);
    e.u1 = dot(p1 - e.origin, e.axis);
    return e;
  }

  static Point curve_point(const MedialEdge& e, Point p0, double s) {
    if (e.curve == MedialEdge::Curve::line) return p0 + e.axis * s;
    return parabola_point(e, e.u0 + s * (e.u1 - e.u0));
  }

  void extract() {
    const auto& grid = poly().grid();
    const std::size_t n = grid.size();
    std::vector<GridSegment> segments;
    segments.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = grid[i];
      const auto& b = grid[(i + 1) % n];
      segments.push_back({{static_cast<int>(a[0]), static_cast<int>(a[1])},
                          {static_cast<int>(b[0]), static_cast<int>(b[1])}});
    }
    VoronoiDiagram vd;
    bp::construct_voronoi(segments.begin(), segments.end(), &vd);

    const double inv_scale = 1.0 / poly().grid_scale();
    auto position = [&](const VoronoiVertex* v) { return Point{v->x() * inv_scale, v->y() * inv_scale}; };

    std::unordered_map<const VoronoiVertex*, std::size_t> vertex_id;
    auto vertex_index = [&](const VoronoiVertex* v) {
      auto [it, inserted] = vertex_id.try_emplace(v, graph_->vertices_.size());
      if (inserted) {
        const Point p = position(v);
        graph_->vertices_.push_back({p, poly().distance_to_boundary(p)});
      }
      return it->second;
    };

    // Keep primary finite edges whose interior lies strictly inside.
    std::unordered_map<const VoronoiEdge*, std::size_t> half_id;
    std::vector<const VoronoiEdge*> kept;
    for (const VoronoiEdge& be : vd.edges()) {
      if (&be > be.twin()) continue;  // visit each pair once
      if (be.is_infinite() || be.is_secondary()) continue;
      const Point p0 = position(be.vertex0());
      const Point p1 = position(be.vertex1());
      const MedialSite left = site_of(*be.cell());
      const MedialSite right = site_of(*be.twin()->cell());
      MedialEdge e = make_edge(p0, p1, left, right);
      if (poly().locate(curve_point(e, p0, 0.5)) != Location::inside) continue;
      e.v0 = vertex_index(be.vertex0());
      e.v1 = vertex_index(be.vertex1());
      half_id[&be] = 2 * graph_->edges_.size();
      half_id[be.twin()] = 2 * graph_->edges_.size() + 1;
      kept.push_back(&be);
      kept.push_back(be.twin());
      graph_->edges_.push_back(e);
    }

    graph_->rot_next_.assign(2 * graph_->edges_.size(), 0);
    for (const VoronoiEdge* be : kept) {
      const VoronoiEdge* next = be->rot_next();
      while (!half_id.count(next)) next = next->rot_next();
      graph_->rot_next_[half_id[be]] = half_id[next];
    }
  }

  // Splits edges at interior minima of the clearance so that every edge is
  // monotone.
  void split_at_minima() {
    auto& g = *graph_;
    const double tol = g.tolerance().geom;
    const std::size_t edge_count = g.edges_.size();
    // Half-edge of the first piece leaving each original endpoint.
    std::vector<std::size_t> remap(2 * edge_count);
    std::iota(remap.begin(), remap.end(), std::size_t{0});
    std::vector<std::pair<std::size_t, std::size_t>> splits;  // (old edge, new edge)

    for (std::size_t e = 0; e < edge_count; ++e) {
      MedialEdge& edge = g.edges_[e];
      const Point p0 = g.vertices_[edge.v0].position;
      const Point p1 = g.vertices_[edge.v1].position;
      Point split_point;
      double split_clearance = 0.0;
      MedialEdge first = edge;
      MedialEdge second = edge;
      bool split = false;

      if (edge.curve == MedialEdge::Curve::parabola) {
        const double uf = dot(edge.focus - edge.origin, edge.axis);
        const double lo = std::min(edge.u0, edge.u1);
        const double hi = std::max(edge.u0, edge.u1);
        if (uf > lo + tol && uf < hi - tol) {
          split = true;
          split_point = parabola_point(edge, uf);
          split_clearance = parabola_height(edge, uf);
          first.u1 = uf;
          second.u0 = uf;
        }
      } else if (is_point_site(edge.left) && is_point_site(edge.right)) {
        const Point a = g.polygon_.vertex(edge.left.index);
        const Point d = p1 - p0;
        const double len2 = dot(d, d);
        if (len2 > 0.0) {
          const double s = -dot(p0 - a, d) / len2;
          const double len = std::sqrt(len2);
          if (s * len > tol && (1.0 - s) * len > tol) {
            split = true;
            split_point = p0 + d * s;
            split_clearance = distance(split_point, a);
          }
        }
      }
      if (!split) continue;

      const std::size_t vm = g.vertices_.size();
      g.vertices_.push_back({split_point, split_clearance});
      const std::size_t e2 = g.edges_.size();
      first.v1 = vm;
      second.v0 = vm;
      if (first.curve == MedialEdge::Curve::line) {
        first.axis = split_point - p0;
        second.origin = split_point;
        second.axis = p1 - split_point;
      }
      g.edges_[e] = first;
      g.edges_.push_back(second);
      remap[2 * e + 1] = 2 * e2 + 1;
      splits.emplace_back(e, e2);
    }

    std::vector<std::size_t> rot(2 * g.edges_.size(), 0);
    for (std::size_t h = 0; h < 2 * edge_count; ++h) rot[remap[h]] = remap[g.rot_next_[h]];
    for (auto [e, e2] : splits) {
      rot[2 * e + 1] = 2 * e2;
      rot[2 * e2] = 2 * e + 1;
    }
    g.rot_next_ = std::move(rot);
  }

  void finish() {
    auto& g = *graph_;
    const std::size_t nv = g.vertices_.size();
    if (g.edges_.empty() || g.edges_.size() + 1 != nv) {
      throw StructuralError("medial axis is not a tree (" + std::to_string(nv) + " vertices, " +
                            std::to_string(g.edges_.size()) + " edges)");
    }
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const MedialEdge& e : g.edges_) {
      const std::size_t a = find(e.v0);
      const std::size_t b = find(e.v1);
      if (a == b) throw StructuralError("medial axis contains a cycle");
      parent[a] = b;
    }

    for (const MedialVertex& v : g.vertices_) g.inradius_ = std::max(g.inradius_, v.clearance);

    for (const MedialEdge& e : g.edges_) {
      for (const MedialSite& s : {e.left, e.right}) {
        if (std::find(g.sites_.begin(), g.sites_.end(), s) == g.sites_.end()) g.sites_.push_back(s);
      }
    }
  }

  std::unique_ptr<MedialGraph> graph_;
};

std::shared_ptr<const MedialGraph> MedialGraph::build(const JordanPolygon& polygon) {
  return MedialBuilder(polygon).run();
}

std::size_t MedialGraph::origin(std::size_t h) const {
  const MedialEdge& e = edges_[edge_of(h)];
  return is_forward(h) ? e.v0 : e.v1;
}

std::size_t MedialGraph::target(std::size_t h) const {
  const MedialEdge& e = edges_[edge_of(h)];
  return is_forward(h) ? e.v1 : e.v0;
}

MedialSite MedialGraph::right_site(std::size_t h) const {
  const MedialEdge& e = edges_[edge_of(h)];
  return is_forward(h) ? e.right : e.left;
}

std::vector<std::size_t> MedialGraph::outgoing(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < half_edge_count(); ++h) {
    if (origin(h) == v) {
      out.push_back(h);
      for (std::size_t k = rot_next_[h]; k != h; k = rot_next_[k]) out.push_back(k);
      break;
    }
  }
  return out;
}

Point MedialGraph::point_at(std::size_t e, double s) const {
  const MedialEdge& edge = edges_[e];
  if (s <= 0.0) return vertices_[edge.v0].position;
  if (s >= 1.0) return vertices_[edge.v1].position;
  if (edge.curve == MedialEdge::Curve::line) return edge.origin + edge.axis * s;
  return parabola_point(edge, edge.u0 + s * (edge.u1 - edge.u0));
}

double MedialGraph::clearance_at(std::size_t e, double s) const {
  const MedialEdge& edge = edges_[e];
  if (s <= 0.0) return clearance_begin(e);
  if (s >= 1.0) return clearance_end(e);
  if (edge.curve == MedialEdge::Curve::parabola) {
    return parabola_height(edge, edge.u0 + s * (edge.u1 - edge.u0));
  }
  if (is_point_site(edge.left)) return distance(point_at(e, s), polygon_.vertex(edge.left.index));
  return clearance_begin(e) + s * (clearance_end(e) - clearance_begin(e));
}

double MedialGraph::param_at_clearance(std::size_t e, double r) const {
  const MedialEdge& edge = edges_[e];
  const double c0 = clearance_begin(e);
  const double c1 = clearance_end(e);
  if (c0 == c1) return 0.0;
  double s = 0.0;
  if (edge.curve == MedialEdge::Curve::parabola) {
    const Point rel = edge.focus - edge.origin;
    const double uf = dot(rel, edge.axis);
    const double df = dot(rel, edge.normal);
    const double w = std::sqrt(std::max(0.0, 2.0 * df * r - df * df));
    const double side = 0.5 * (edge.u0 + edge.u1) >= uf ? 1.0 : -1.0;
    const double u = uf + side * w;
    s = edge.u1 == edge.u0 ? 0.0 : (u - edge.u0) / (edge.u1 - edge.u0);
  } else if (is_point_site(edge.left)) {
    const Point a = polygon_.vertex(edge.left.index);
    const Point p0 = vertices_[edge.v0].position;
    const Point d = edge.axis;
    const Point rel = p0 - a;
    const double qa = dot(d, d);
    const double qb = 2.0 * dot(rel, d);
    const double qc = dot(rel, rel) - r * r;
    const double disc = std::sqrt(std::max(0.0, qb * qb - 4.0 * qa * qc));
    // Monotone piece: increasing clearance uses the larger root.
    const double sign = c1 > c0 ? 1.0 : -1.0;
    s = (-qb + sign * disc) / (2.0 * qa);
  } else {
    s = (r - c0) / (c1 - c0);
  }
  return std::clamp(s, 0.0, 1.0);
}

double MedialGraph::arclength(std::size_t e, double s0, double s1) const {
  const MedialEdge& edge = edges_[e];
  if (edge.curve == MedialEdge::Curve::line) return norm(edge.axis) * (s1 - s0);
  const double ua = edge.u0 + s0 * (edge.u1 - edge.u0);
  const double ub = edge.u0 + s1 * (edge.u1 - edge.u0);
  return std::abs(parabola_primitive(edge, ub) - parabola_primitive(edge, ua));
}

double MedialGraph::param_at_arclength(std::size_t e, double len) const {
  const double total = arclength(e);
  if (total <= 0.0 || len <= 0.0) return 0.0;
  if (len >= total) return 1.0;
  if (edges_[e].curve == MedialEdge::Curve::line) return len / total;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 100 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (arclength(e, 0.0, mid) < len ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Point MedialGraph::foot(const MedialSite& site, Point p) const {
  if (site.kind == MedialSite::Kind::reflex_vertex) return polygon_.vertex(site.index);
  return closest_on_segment(p, polygon_.edge_start(site.index), polygon_.edge_end(site.index));
}

double MedialGraph::site_distance(const MedialSite& site, Point p) const {
  return distance(p, foot(site, p));
}

double MedialGraph::nearest_site_distance(Point p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const MedialSite& s : sites_) best = std::min(best, site_distance(s, p));
  return best;
}

std::vector<double> MedialGraph::critical_radii() const {
  const double tol = tolerance().geom;
  std::vector<double> radii;
  for (const MedialVertex& v : vertices_) {
    if (v.clearance > tol) radii.push_back(v.clearance);
  }
  std::sort(radii.begin(), radii.end());
  std::vector<double> out;
  for (double r : radii) {
    if (out.empty() || r - out.back() > tol) out.push_back(r);
  }
  return out;
}

double clearance_at(const MedialGraph& graph, Point p) {
  if (graph.polygon().locate(p) == Location::outside) {
    throw DomainError("clearance query outside the domain");
  }
  return graph.polygon().distance_to_boundary(p);
}

}  // namespace cheeger
