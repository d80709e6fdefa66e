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

#ifndef CHEEGER_PARALLEL_STRUCTURE_HPP_
#define CHEEGER_PARALLEL_STRUCTURE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "cheeger/geometry.hpp"
#include "cheeger/medial_axis.hpp"

namespace cheeger {

// Parameter interval [lo, hi] of a medial edge kept at some radius.
struct EdgeSpan {
  bool on = false;
  double lo = 0.0;
  double hi = 0.0;
};

// The part of the medial axis with clearance >= r (closed condition, with
// the degeneracy tolerance applied), possibly trimmed further.
struct Inclusion {
  double r = 0.0;
  std::vector<char> vertex;
  std::vector<EdgeSpan> edge;
};

Inclusion include_at(const MedialGraph& graph, double r);

// Traversal of edge `edge` from parameter s_from to s_to.
struct SkeletonPiece {
  std::size_t edge = 0;
  double s_from = 0.0;
  double s_to = 0.0;
};

// A chain of medial pieces along which the clearance equals r: a tendril
// (one end attached to the interior of the parallel set), a handle (both
// ends attached) or a degenerate curve (no interior at all).
class SkeletonCurve {
 public:
  enum class Family { gamma1, gamma2, unset };

  SkeletonCurve(const MedialGraph& graph, std::vector<SkeletonPiece> pieces, Family family,
                bool start_attached, bool end_attached);

  const std::vector<SkeletonPiece>& pieces() const { return pieces_; }
  Family family() const { return family_; }
  bool start_attached() const { return start_attached_; }
  bool end_attached() const { return end_attached_; }
  // Polyline through the chain; exact for straight pieces.
  const std::vector<Point>& points() const { return points_; }
  double length() const { return cumulative_.back(); }
  Point point_at_length(double s) const;
  Point tangent_at_length(double s) const;
  // The two points at distance r on either side of the curve
  // (left, then right of the direction of travel).
  std::pair<Point, Point> offsets_at_length(double s, double r) const;

 private:
  std::size_t segment_at(double s) const;

  std::vector<SkeletonPiece> pieces_;
  Family family_;
  bool start_attached_;
  bool end_attached_;
  std::vector<Point> points_;
  std::vector<double> cumulative_;
};

// One connected component of the clearance->=r skeleton, traced as the
// counterclockwise boundary of the corresponding part of the parallel set.
// The walk may be weakly simple (curves are walked out and back). It is empty
// when the component is a single point.
struct CoreComponent {
  ArcLoop walk;
  Point anchor;
  bool fat = false;
};

// Traces every component of an inclusion.
std::vector<CoreComponent> trace_cores(const MedialGraph& graph, const Inclusion& inclusion);

// The inner parallel set {x : dist(x, boundary) >= r} and its parts.
struct ParallelStructure {
  double r = 0.0;
  Inclusion inclusion;
  std::vector<CoreComponent> cores;
  std::vector<ArcRegion> interior_components;
  std::vector<SkeletonCurve> tendrils;
  std::vector<SkeletonCurve> handles;
  std::vector<Point> degenerate_points;
  std::vector<SkeletonCurve> degenerate_curves;

  bool empty() const { return cores.empty(); }
  bool connected() const { return cores.size() <= 1; }
  // Area of the parallel set (curves have no area).
  double area() const;
};

// Throws DomainError for r <= 0; r above the inradius gives an empty
// structure.
ParallelStructure erode(const MedialGraph& graph, double r);

// Inclusion with every tendril cut down to the first fraction t of its
// length, measured from its attached end. t = 0 drops tendrils entirely.
Inclusion truncate_tendrils(const MedialGraph& graph, const ParallelStructure& structure,
                            double t);

// Whether the clearance->=r skeleton is connected. Throws DomainError for
// r outside (0, inradius].
bool has_no_neck(const MedialGraph& graph, double r);

struct NoNeckSample {
  double r = 0.0;
  bool no_neck = true;
};

// Verdicts on a uniform grid of `samples` radii in (0, inradius] merged with
// every critical radius. Throws DomainError for samples < 2.
std::vector<NoNeckSample> no_neck_profile(const MedialGraph& graph, std::size_t samples);

// Maximal radius intervals (lo, hi] on which the skeleton is disconnected.
struct NeckBand {
  double lo = 0.0;
  double hi = 0.0;
};
std::vector<NeckBand> neck_bands(const MedialGraph& graph);

// Area of the parallel set at radius r, without classifying its parts.
double parallel_area(const MedialGraph& graph, double r);

// The positive root of pi rho^2 = |{dist >= rho}|, found by bisection with
// the critical radii as bracket refinement points. The function is strictly
// increasing, so the root is unique.
double inner_cheeger_root(const MedialGraph& graph);

// True when the domain has no necks on (0, R] for some R > r, in which case
// the structure can have no handles.
bool gamma2_empty_check(const ParallelStructure& structure, const MedialGraph& graph);

}  // namespace cheeger

#endif  // CHEEGER_PARALLEL_STRUCTURE_HPP_
