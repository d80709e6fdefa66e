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

#ifndef CHEEGER_MEDIAL_AXIS_HPP_
#define CHEEGER_MEDIAL_AXIS_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "cheeger/geometry.hpp"
#include "cheeger/polygon.hpp"

namespace cheeger {

// A generator of the medial axis: an (open) polygon edge or a reflex
// vertex. Convex vertices are absorbed into their adjacent edges.
struct MedialSite {
  enum class Kind { polygon_edge, reflex_vertex };
  Kind kind = Kind::polygon_edge;
  std::size_t index = 0;

  friend bool operator==(const MedialSite&, const MedialSite&) = default;
};

struct MedialVertex {
  Point position;
  double clearance = 0.0;
};

// One piece of the medial axis. Parameter s in [0, 1] runs from v0 to v1;
// `left`/`right` are the sites on either side when travelling that way.
// Pieces are split at interior clearance minima, so clearance is monotone
// along every edge.
struct MedialEdge {
  enum class Curve { line, parabola };

  std::size_t v0 = 0;
  std::size_t v1 = 0;
  MedialSite left;
  MedialSite right;
  Curve curve = Curve::line;
  // Parabola between a reflex vertex (focus) and a polygon edge (directrix):
  // points are origin + u * axis + height(u) * normal for u in [u0, u1].
  Point focus;
  Point origin;
  Point axis;
  Point normal;
  double u0 = 0.0;
  double u1 = 0.0;
};

// Medial axis of a simple polygon with its clearance function, stored as a
// tree with a half-edge rotation system. Half-edge 2e runs v0 -> v1 of edge
// e, half-edge 2e + 1 runs v1 -> v0. Immutable once built.
class MedialGraph {
 public:
  // Throws InputError for unusable polygons and StructuralError if the
  // extracted axis is not a tree.
  static std::shared_ptr<const MedialGraph> build(const JordanPolygon& polygon);

  const JordanPolygon& polygon() const { return polygon_; }
  const std::vector<MedialVertex>& vertices() const { return vertices_; }
  const std::vector<MedialEdge>& edges() const { return edges_; }
  double inradius() const { return inradius_; }
  Tolerance tolerance() const { return polygon_.tolerance(); }

  // Half-edge navigation.
  static std::size_t edge_of(std::size_t h) { return h / 2; }
  static bool is_forward(std::size_t h) { return h % 2 == 0; }
  static std::size_t twin(std::size_t h) { return h ^ 1U; }
  std::size_t half_edge_count() const { return 2 * edges_.size(); }
  std::size_t origin(std::size_t h) const;
  std::size_t target(std::size_t h) const;
  MedialSite right_site(std::size_t h) const;
  // Next half-edge counterclockwise around origin(h).
  std::size_t next_ccw(std::size_t h) const { return rot_next_[h]; }
  // Half-edges leaving vertex v, counterclockwise.
  std::vector<std::size_t> outgoing(std::size_t v) const;

  // Geometry of edge e at parameter s in [0, 1].
  Point point_at(std::size_t e, double s) const;
  double clearance_at(std::size_t e, double s) const;
  double clearance_begin(std::size_t e) const { return vertices_[edges_[e].v0].clearance; }
  double clearance_end(std::size_t e) const { return vertices_[edges_[e].v1].clearance; }
  // Parameter where the (monotone) clearance of edge e equals r, clamped to
  // [0, 1].
  double param_at_clearance(std::size_t e, double r) const;
  // Arc length of edge e between parameters s0 <= s1.
  double arclength(std::size_t e, double s0 = 0.0, double s1 = 1.0) const;
  // Parameter at which the arc length from s = 0 reaches `len`.
  double param_at_arclength(std::size_t e, double len) const;

  // Nearest point of a site to p, and its distance.
  Point foot(const MedialSite& site, Point p) const;
  double site_distance(const MedialSite& site, Point p) const;

  // Distinct sites carried by the graph.
  const std::vector<MedialSite>& sites() const { return sites_; }
  // Distance from p to the nearest site of the graph.
  double nearest_site_distance(Point p) const;

  // Clearance values of all vertices, sorted and de-duplicated within the
  // geometric tolerance: the radii at which the topology of the clearance
  // filtration can change.
  std::vector<double> critical_radii() const;

 private:
  explicit MedialGraph(const JordanPolygon& polygon) : polygon_(polygon) {}

  JordanPolygon polygon_;
  std::vector<MedialVertex> vertices_;
  std::vector<MedialEdge> edges_;
  std::vector<std::size_t> rot_next_;
  std::vector<MedialSite> sites_;
  double inradius_ = 0.0;

  friend class MedialBuilder;
};

using MedialGraphPtr = std::shared_ptr<const MedialGraph>;

// Distance from p to the polygon boundary by direct minimization over the
// polygon edges. Throws DomainError when p is outside the polygon.
double clearance_at(const MedialGraph& graph, Point p);

}  // namespace cheeger

#endif  // CHEEGER_MEDIAL_AXIS_HPP_
