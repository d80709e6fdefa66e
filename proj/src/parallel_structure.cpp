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

#include "cheeger/parallel_structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cheeger/errors.hpp"

namespace cheeger {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool reaches_lo(const EdgeSpan& s) { return s.on && s.lo == 0.0; }
bool reaches_hi(const EdgeSpan& s) { return s.on && s.hi == 1.0; }

// Components of the included skeleton, keyed by a representative vertex.
struct Components {
  std::vector<std::size_t> root;  // per vertex; meaningful for included ones
  std::vector<std::size_t> roots;  // distinct, in vertex order
};

Components components_of(const MedialGraph& g, const Inclusion& inc) {
  const std::size_t nv = g.vertices().size();
  UnionFind uf(nv);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const EdgeSpan& s = inc.edge[e];
    if (reaches_lo(s) && reaches_hi(s)) uf.unite(g.edges()[e].v0, g.edges()[e].v1);
  }
  Components c;
  c.root.resize(nv);
  std::vector<char> seen(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    c.root[v] = uf.find(v);
    if (inc.vertex[v] && !seen[c.root[v]]) {
      seen[c.root[v]] = 1;
      c.roots.push_back(c.root[v]);
    }
  }
  return c;
}

bool included_half(const MedialGraph& g, const Inclusion& inc, std::size_t h) {
  const EdgeSpan& s = inc.edge[MedialGraph::edge_of(h)];
  if (!inc.vertex[g.origin(h)]) return false;
  return MedialGraph::is_forward(h) ? reaches_lo(s) : reaches_hi(s);
}

struct Step {
  std::size_t half = 0;
  double s_from = 0.0;
  double s_to = 0.0;
};

// Euler tour of the included subtree containing half-edge `start`, keeping
// the traced site on the right.
std::vector<Step> tour(const MedialGraph& g, const Inclusion& inc, std::size_t start) {
  std::vector<Step> steps;
  std::size_t h = start;
  const std::size_t limit = 4 * g.half_edge_count() + 4;
  do {
    const EdgeSpan& span = inc.edge[MedialGraph::edge_of(h)];
    const bool fwd = MedialGraph::is_forward(h);
    const double s_origin = fwd ? 0.0 : 1.0;
    const double s_far = fwd ? span.hi : span.lo;
    steps.push_back({h, s_origin, s_far});
    std::size_t k;
    if (fwd ? reaches_hi(span) : reaches_lo(span)) {
      k = g.next_ccw(MedialGraph::twin(h));
    } else {
      steps.push_back({MedialGraph::twin(h), s_far, s_origin});
      k = g.next_ccw(h);
    }
    while (!included_half(g, inc, k)) k = g.next_ccw(k);
    h = k;
    if (steps.size() > limit) throw StructuralError("skeleton tour does not close");
  } while (h != start);
  return steps;
}

Point offset_point(const MedialGraph& g, std::size_t e, double s, const MedialSite& site, double r) {
  const Point m = g.point_at(e, s);
  const double c = g.clearance_at(e, s);
  if (c <= r) return m;
  const Point f = g.foot(site, m);
  return f + (m - f) * (r / c);
}

ArcEdge rebuild_arc(const ArcEdge& a, Point start, Point end) {
  ArcEdge out = ArcEdge::arc(start, end, a.center(), a.radius(), a.orientation());
  if (out.sweep() > kPi) return ArcEdge::segment(start, end);
  return out;
}

// Makes consecutive edges share endpoints exactly, dropping edges shorter
// than `tiny`.
void stitch(std::vector<ArcEdge>& edges, double tiny) {
  std::vector<ArcEdge> kept;
  for (const ArcEdge& e : edges) {
    if (e.length() > tiny) kept.push_back(e);
  }
  const std::size_t n = kept.size();
  for (std::size_t i = 0; i < n; ++i) {
    ArcEdge& prev = kept[(i + n - 1) % n];
    ArcEdge& cur = kept[i];
    if (prev.end() == cur.start()) continue;
    if (!cur.is_arc()) {
      cur = ArcEdge::segment(prev.end(), cur.end());
    } else if (!prev.is_arc()) {
      prev = ArcEdge::segment(prev.start(), cur.start());
    } else {
      cur = rebuild_arc(cur, prev.end(), cur.end());
    }
  }
  edges = std::move(kept);
}

// Offset pieces traced along the same site are merged, which keeps rounding
// noise in very short pieces out of the joint angles.
ArcLoop walk_from_steps(const MedialGraph& g, const std::vector<Step>& steps, double r) {
  const Tolerance tol = g.tolerance();
  std::vector<ArcEdge> raw;
  std::vector<std::ptrdiff_t> key;  // site key, -1 for pieces drawn on the skeleton
  for (const Step& st : steps) {
    const std::size_t e = MedialGraph::edge_of(st.half);
    const double c_max = std::max(g.clearance_at(e, st.s_from), g.clearance_at(e, st.s_to));
    if (c_max <= r + tol.deg) {
      const Point a = g.point_at(e, st.s_from);
      const Point b = g.point_at(e, st.s_to);
      if (a != b) {
        raw.push_back(ArcEdge::segment(a, b));
        key.push_back(-1);
      }
      continue;
    }
    const MedialSite site = g.right_site(st.half);
    const Point a = offset_point(g, e, st.s_from, site, r);
    const Point b = offset_point(g, e, st.s_to, site, r);
    if (a == b) continue;
    const bool is_edge = site.kind == MedialSite::Kind::polygon_edge;
    if (is_edge) {
      raw.push_back(ArcEdge::segment(a, b));
    } else {
      ArcEdge arc = ArcEdge::arc(a, b, g.polygon().vertex(site.index), r, Orientation::cw);
      raw.push_back(arc.sweep() > kPi ? ArcEdge::segment(a, b) : arc);
    }
    key.push_back(static_cast<std::ptrdiff_t>(2 * site.index + (is_edge ? 0 : 1)));
  }

  const std::size_t n = raw.size();
  std::size_t first = 0;
  while (first < n && key[first] >= 0 && key[first] == key[(first + n - 1) % n]) ++first;
  if (first == n) first = 0;
  std::vector<ArcEdge> edges;
  for (std::size_t k = 0; k < n;) {
    const std::size_t i = (first + k) % n;
    std::size_t len = 1;
    while (key[i] >= 0 && k + len < n && key[(first + k + len) % n] == key[i]) ++len;
    const ArcEdge& a = raw[i];
    const ArcEdge& b = raw[(i + len - 1) % n];
    if (len == 1) {
      edges.push_back(a);
    } else if (!a.is_arc()) {
      edges.push_back(ArcEdge::segment(a.start(), b.end()));
    } else {
      edges.push_back(rebuild_arc(a, a.start(), b.end()));
    }
    k += len;
  }
  stitch(edges, tol.geom);
  return ArcLoop{std::move(edges)};
}

// Splits a weakly simple walk at repeated points into simple loops and keeps
// those enclosing positive area.
std::vector<ArcLoop> split_loops(const ArcLoop& walk, double tol, double area_tol) {
  std::vector<ArcLoop> loops;
  std::vector<ArcEdge> stack;
  for (const ArcEdge& e : walk.edges) {
    stack.push_back(e);
    const Point p = e.end();
    for (std::size_t j = stack.size(); j-- > 0;) {
      if (distance(stack[j].start(), p) <= tol) {
        ArcLoop loop{std::vector<ArcEdge>(stack.begin() + static_cast<std::ptrdiff_t>(j), stack.end())};
        stack.resize(j);
        if (signed_area(loop) > area_tol) loops.push_back(std::move(loop));
        break;
      }
    }
  }
  return loops;
}

double piece_length(const MedialGraph& g, const SkeletonPiece& p) {
  return g.arclength(p.edge, std::min(p.s_from, p.s_to), std::max(p.s_from, p.s_to));
}

}  // namespace

Inclusion include_at(const MedialGraph& g, double r) {
  const double deg = g.tolerance().deg;
  const std::size_t nv = g.vertices().size();
  Inclusion inc;
  inc.r = r;
  inc.vertex.assign(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) inc.vertex[v] = g.vertices()[v].clearance >= r - deg;
  inc.edge.assign(g.edges().size(), EdgeSpan{});
  const double below_one = std::nextafter(1.0, 0.0);
  const double above_zero = std::nextafter(0.0, 1.0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const double c0 = g.clearance_begin(e);
    const double c1 = g.clearance_end(e);
    EdgeSpan& s = inc.edge[e];
    if (std::abs(c0 - r) <= deg && std::abs(c1 - r) <= deg) {
      s = {true, 0.0, 1.0};
    } else if (std::max(c0, c1) < r - deg) {
      s = {};
    } else if (c0 >= c1) {
      double hi = 1.0;
      if (c1 < r - deg) hi = c0 <= r ? 0.0 : std::min(g.param_at_clearance(e, r), below_one);
      s = {hi > 0.0, 0.0, hi};
    } else {
      double lo = 0.0;
      if (c0 < r - deg) lo = c1 <= r ? 1.0 : std::max(g.param_at_clearance(e, r), above_zero);
      s = {lo < 1.0, lo, 1.0};
    }
  }
  return inc;
}

SkeletonCurve::SkeletonCurve(const MedialGraph& graph, std::vector<SkeletonPiece> pieces, Family family,
                             bool start_attached, bool end_attached)
    : pieces_(std::move(pieces)),
      family_(family),
      start_attached_(start_attached),
      end_attached_(end_attached) {
  for (const SkeletonPiece& p : pieces_) {
    const int subdivisions = graph.edges()[p.edge].curve == MedialEdge::Curve::parabola ? 16 : 1;
    for (int k = 0; k <= subdivisions; ++k) {
      const double s = p.s_from + (p.s_to - p.s_from) * k / subdivisions;
      const Point q = graph.point_at(p.edge, s);
      if (points_.empty() || points_.back() != q) points_.push_back(q);
    }
  }
  cumulative_.push_back(0.0);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    cumulative_.push_back(cumulative_.back() + distance(points_[i - 1], points_[i]));
  }
}

std::size_t SkeletonCurve::segment_at(double s) const {
  if (points_.size() < 2) return 0;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = it == cumulative_.begin() ? 0 : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  return std::min(i, points_.size() - 2);
}

Point SkeletonCurve::point_at_length(double s) const {
  if (points_.size() < 2) return points_.front();
  const std::size_t i = segment_at(s);
  const double len = cumulative_[i + 1] - cumulative_[i];
  const double f = std::clamp((s - cumulative_[i]) / len, 0.0, 1.0);
  return points_[i] + (points_[i + 1] - points_[i]) * f;
}

Point SkeletonCurve::tangent_at_length(double s) const {
  if (points_.size() < 2) return {1.0, 0.0};
  const std::size_t i = segment_at(s);
  return normalized(points_[i + 1] - points_[i]);
}

std::pair<Point, Point> SkeletonCurve::offsets_at_length(double s, double r) const {
  const Point p = point_at_length(s);
  const Point n = perp(tangent_at_length(s));
  return {p + n * r, p - n * r};
}

std::vector<CoreComponent> trace_cores(const MedialGraph& g, const Inclusion& inc) {
  const double r = inc.r;
  const double deg = g.tolerance().deg;
  const Components comps = components_of(g, inc);
  std::vector<CoreComponent> out;
  for (std::size_t root : comps.roots) {
    CoreComponent core;
    double best = -1.0;
    std::size_t start = g.half_edge_count();
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
      if (!inc.vertex[v] || comps.root[v] != root) continue;
      const double c = g.vertices()[v].clearance;
      if (c > best) {
        best = c;
        core.anchor = g.vertices()[v].position;
      }
    }
    core.fat = best > r + deg;
    for (std::size_t h = 0; h < g.half_edge_count() && start == g.half_edge_count(); ++h) {
      if (included_half(g, inc, h) && comps.root[g.origin(h)] == root) start = h;
    }
    if (start != g.half_edge_count()) {
      core.walk = walk_from_steps(g, tour(g, inc, start), r);
    }
    out.push_back(std::move(core));
  }
  return out;
}

double ParallelStructure::area() const {
  double a = 0.0;
  for (const ArcRegion& c : interior_components) {
    for (const ArcLoop& l : c.outer_loops) a += signed_area(l);
  }
  return a;
}

namespace {

// Splits the degenerate (clearance within the tolerance band of r) part of
// the included skeleton into chains and classifies them.
void classify_curves(const MedialGraph& g, ParallelStructure& ps) {
  Inclusion& inc = ps.inclusion;
  const double r = ps.r;
  const double deg = g.tolerance().deg;
  const std::size_t nv = g.vertices().size();
  const std::size_t ne = g.edges().size();
  const std::size_t none = static_cast<std::size_t>(-1);

  std::vector<char> band(ne, 0);
  std::vector<char> attached(nv, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    const EdgeSpan& s = inc.edge[e];
    if (!s.on) continue;
    const double c_max = std::max(g.clearance_at(e, s.lo), g.clearance_at(e, s.hi));
    band[e] = c_max <= r + deg;
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const EdgeSpan& s = inc.edge[e];
    if (!s.on || band[e]) continue;
    if (reaches_lo(s)) attached[g.edges()[e].v0] = 1;
    if (reaches_hi(s)) attached[g.edges()[e].v1] = 1;
  }

  // Node ids: vertices, then one free end per edge side.
  auto lo_node = [&](std::size_t e) { return inc.edge[e].lo == 0.0 ? g.edges()[e].v0 : nv + 2 * e; };
  auto hi_node = [&](std::size_t e) { return inc.edge[e].hi == 1.0 ? g.edges()[e].v1 : nv + 2 * e + 1; };
  std::vector<std::vector<std::size_t>> adj(nv + 2 * ne);
  auto rebuild_adjacency = [&] {
    for (auto& a : adj) a.clear();
    for (std::size_t e = 0; e < ne; ++e) {
      if (!band[e]) continue;
      adj[lo_node(e)].push_back(e);
      adj[hi_node(e)].push_back(e);
    }
  };
  rebuild_adjacency();

  // Drop spurs hanging off branch points when they are tolerance-sized or end
  // at a cut point. A band edge cut at clearance r has all of its clearance
  // within the tolerance band, so it only marks the tip of a thin corridor.
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (std::size_t n = 0; n < adj.size(); ++n) {
      if (adj[n].size() != 1 || (n < nv && attached[n])) continue;
      const std::size_t e = adj[n][0];
      const std::size_t other = lo_node(e) == n ? hi_node(e) : lo_node(e);
      if (adj[other].size() < 3) continue;
      if (n < nv && g.arclength(e, inc.edge[e].lo, inc.edge[e].hi) > deg) continue;
      band[e] = 0;
      inc.edge[e] = {};
      if (n < nv) inc.vertex[n] = 0;
      pruned = true;
    }
    if (pruned) rebuild_adjacency();
  }

  const Components comps = components_of(g, inc);
  std::vector<char> fat_root(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    if (inc.vertex[v] && g.vertices()[v].clearance > r + deg) fat_root[comps.root[v]] = 1;
  }

  auto is_node = [&](std::size_t n) { return adj[n].size() != 2 || (n < nv && attached[n]); };
  std::vector<char> used(ne, 0);
  std::vector<char> root_has_curve(nv, 0);
  for (std::size_t start = 0; start < adj.size(); ++start) {
    if (adj[start].empty() || !is_node(start)) continue;
    for (std::size_t first : adj[start]) {
      if (used[first]) continue;
      std::vector<SkeletonPiece> pieces;
      std::size_t node = start;
      std::size_t e = first;
      std::size_t some_vertex = start < nv ? start : none;
      while (true) {
        used[e] = 1;
        const bool from_lo = lo_node(e) == node;
        const EdgeSpan& s = inc.edge[e];
        pieces.push_back(from_lo ? SkeletonPiece{e, s.lo, s.hi} : SkeletonPiece{e, s.hi, s.lo});
        node = from_lo ? hi_node(e) : lo_node(e);
        if (node < nv) some_vertex = node;
        if (is_node(node)) break;
        e = adj[node][0] == e ? adj[node][1] : adj[node][0];
      }
      if (some_vertex == none) throw StructuralError("skeleton chain without a vertex");
      const std::size_t root = comps.root[some_vertex];
      const bool a0 = start < nv && attached[start];
      const bool a1 = node < nv && attached[node];
      if (!fat_root[root]) {
        root_has_curve[root] = 1;
        ps.degenerate_curves.emplace_back(g, std::move(pieces), SkeletonCurve::Family::unset, false, false);
      } else if (a0 && a1) {
        ps.handles.emplace_back(g, std::move(pieces), SkeletonCurve::Family::gamma2, true, true);
      } else if (a0 || a1) {
        if (!a0) {
          std::reverse(pieces.begin(), pieces.end());
          for (SkeletonPiece& p : pieces) std::swap(p.s_from, p.s_to);
        }
        ps.tendrils.emplace_back(g, std::move(pieces), SkeletonCurve::Family::gamma1, true, false);
      } else {
        throw StructuralError("branched degenerate skeleton is not supported");
      }
    }
  }

  // Degenerate components whose curves are below tolerance are points.
  std::vector<SkeletonCurve> curves;
  for (SkeletonCurve& c : ps.degenerate_curves) {
    if (c.length() > deg) curves.push_back(std::move(c));
  }
  ps.degenerate_curves = std::move(curves);
  std::vector<char> has_long(nv, 0);
  for (const SkeletonCurve& c : ps.degenerate_curves) {
    const MedialEdge& e = g.edges()[c.pieces().front().edge];
    const EdgeSpan& s = inc.edge[c.pieces().front().edge];
    has_long[comps.root[reaches_lo(s) ? e.v0 : e.v1]] = 1;
  }
  for (std::size_t root : comps.roots) {
    if (fat_root[root] || has_long[root]) continue;
    double best = -1.0;
    Point p;
    for (std::size_t v = 0; v < nv; ++v) {
      if (inc.vertex[v] && comps.root[v] == root && g.vertices()[v].clearance > best) {
        best = g.vertices()[v].clearance;
        p = g.vertices()[v].position;
      }
    }
    ps.degenerate_points.push_back(p);
  }
}

}  // namespace

ParallelStructure erode(const MedialGraph& g, double r) {
  if (!(r > 0.0)) throw DomainError("erosion radius must be positive");
  ParallelStructure ps;
  ps.r = r;
  const Tolerance tol = g.tolerance();
  if (r > g.inradius() + tol.deg) {
    ps.inclusion.r = r;
    ps.inclusion.vertex.assign(g.vertices().size(), 0);
    ps.inclusion.edge.assign(g.edges().size(), EdgeSpan{});
    return ps;
  }
  ps.inclusion = include_at(g, r);
  classify_curves(g, ps);
  ps.cores = trace_cores(g, ps.inclusion);
  const double diag = g.polygon().bbox().diagonal();
  for (const CoreComponent& core : ps.cores) {
    if (!core.fat) continue;
    for (ArcLoop& loop : split_loops(core.walk, tol.geom, tol.geom * diag)) {
      ArcRegion region;
      region.outer_loops.push_back(std::move(loop));
      ps.interior_components.push_back(std::move(region));
    }
  }
  return ps;
}

Inclusion truncate_tendrils(const MedialGraph& g, const ParallelStructure& ps, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("tendril fraction must lie in [0, 1]");
  Inclusion inc = ps.inclusion;
  auto vertex_at = [&](std::size_t e, double s) -> std::ptrdiff_t {
    if (s == 0.0) return static_cast<std::ptrdiff_t>(g.edges()[e].v0);
    if (s == 1.0) return static_cast<std::ptrdiff_t>(g.edges()[e].v1);
    return -1;
  };
  for (const SkeletonCurve& c : ps.tendrils) {
    const double keep = t * c.length();
    double acc = 0.0;
    for (const SkeletonPiece& p : c.pieces()) {
      const double len = piece_length(g, p);
      EdgeSpan& span = inc.edge[p.edge];
      if (acc + len <= keep) {
        acc += len;
        continue;
      }
      const std::ptrdiff_t far = vertex_at(p.edge, p.s_to);
      if (far >= 0) inc.vertex[static_cast<std::size_t>(far)] = 0;
      if (acc < keep) {
        const double base = g.arclength(p.edge, 0.0, p.s_from);
        const double target = p.s_to > p.s_from ? base + (keep - acc) : base - (keep - acc);
        const double s_cut = g.param_at_arclength(p.edge, target);
        span.lo = std::min(p.s_from, s_cut);
        span.hi = std::max(p.s_from, s_cut);
        span.on = span.hi > span.lo;
      } else {
        span = {};
      }
      acc = keep;
    }
  }
  return inc;
}

double parallel_area(const MedialGraph& g, double r) {
  if (!(r > 0.0)) throw DomainError("erosion radius must be positive");
  if (r > g.inradius()) return 0.0;
  double a = 0.0;
  for (const CoreComponent& c : trace_cores(g, include_at(g, r))) {
    if (c.fat) a += signed_area(c.walk);
  }
  return a;
}

double inner_cheeger_root(const MedialGraph& g) {
  auto f = [&](double rho) { return kPi * rho * rho - parallel_area(g, rho); };
  double lo = 0.0;
  double hi = g.inradius();
  for (double c : g.critical_radii()) {
    if (f(c) >= 0.0) {
      hi = c;
      break;
    }
    lo = c;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

bool has_no_neck(const MedialGraph& g, double r) {
  if (!(r > 0.0) || r > g.inradius() + g.tolerance().geom) {
    throw DomainError("no-neck radius " + std::to_string(r) + " outside (0, inradius]");
  }
  return components_of(g, include_at(g, r)).roots.size() <= 1;
}

std::vector<NoNeckSample> no_neck_profile(const MedialGraph& g, std::size_t samples) {
  if (samples < 2) throw DomainError("no-neck profile needs at least 2 samples");
  std::vector<double> radii = g.critical_radii();
  for (std::size_t k = 1; k <= samples; ++k) {
    radii.push_back(g.inradius() * static_cast<double>(k) / static_cast<double>(samples));
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  std::vector<NoNeckSample> out;
  for (double r : radii) out.push_back({r, has_no_neck(g, std::min(r, g.inradius()))});
  return out;
}

std::vector<NeckBand> neck_bands(const MedialGraph& g) {
  const std::vector<double> crit = g.critical_radii();
  // States in increasing r: open interval before crit[k], then crit[k].
  struct State {
    double lo;
    double hi;
    bool disconnected;
  };
  std::vector<State> states;
  double prev = 0.0;
  for (double c : crit) {
    states.push_back({prev, c, !has_no_neck(g, 0.5 * (prev + c))});
    states.push_back({c, c, !has_no_neck(g, std::min(c, g.inradius()))});
    prev = c;
  }
  std::vector<NeckBand> bands;
  bool open = false;
  for (const State& s : states) {
    if (s.disconnected) {
      if (!open) bands.push_back({s.lo, s.hi});
      bands.back().hi = s.hi;
      open = true;
    } else {
      open = false;
    }
  }
  return bands;
}

bool gamma2_empty_check(const ParallelStructure& ps, const MedialGraph& g) {
  for (const NeckBand& b : neck_bands(g)) {
    if (b.lo <= ps.r) return false;
  }
  return true;
}

}  // namespace cheeger
