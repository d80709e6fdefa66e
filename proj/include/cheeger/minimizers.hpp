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

#ifndef CHEEGER_MINIMIZERS_HPP_
#define CHEEGER_MINIMIZERS_HPP_

#include <string>
#include <vector>

#include "cheeger/geometry.hpp"
#include "cheeger/medial_axis.hpp"
#include "cheeger/parallel_structure.hpp"
#include "cheeger/polygon.hpp"

namespace cheeger {

// A polygon together with its medial graph and the root of the inner
// Cheeger equation, computed once.
class Domain {
 public:
  explicit Domain(JordanPolygon polygon);

  const JordanPolygon& polygon() const { return graph_->polygon(); }
  const MedialGraph& graph() const { return *graph_; }
  const MedialGraphPtr& graph_ptr() const { return graph_; }
  // 1/h when the domain has no neck at that radius.
  double cheeger_radius() const { return cheeger_radius_; }
  double cheeger_candidate() const { return 1.0 / cheeger_radius_; }

 private:
  MedialGraphPtr graph_;
  double cheeger_radius_;
};

// Minimize P(F) - kappa |F| over F inside the domain.
struct CurvatureProblem {
  CurvatureProblem(const Domain& domain, double kappa);

  const Domain* domain;
  double kappa;
  double r;
};

// Parallel structure at the problem's radius.
ParallelStructure structure_for(const CurvatureProblem& problem);

enum class MinimizerRole { maximal, minimal, interpolant };

struct MinimizerSet {
  MinimizerRole role = MinimizerRole::maximal;
  double t = 1.0;
  double kappa = 0.0;
  double r = 0.0;
  ArcRegion region;
  // From the Steiner formulas applied to the core.
  double volume = 0.0;
  double perimeter = 0.0;
  double f_value = 0.0;
  // Measured on the constructed region.
  double region_area = 0.0;
  double region_perimeter = 0.0;
  // The set before dilation: traced components and their measures. The
  // boundary length counts curves twice (outer Minkowski content).
  Inclusion core_inclusion;
  std::vector<CoreComponent> core;
  double core_area = 0.0;
  double core_content = 0.0;
  // A disk of radius r inside the set.
  Point witness_center;
};

MinimizerSet maximal_minimizer(const CurvatureProblem& problem, const ParallelStructure& structure);
MinimizerSet minimal_minimizer(const CurvatureProblem& problem, const ParallelStructure& structure);
// Tendrils kept up to the fraction t of their length. Throws DomainError for
// t outside [0, 1].
MinimizerSet interpolant(const CurvatureProblem& problem, const ParallelStructure& structure, double t);
// Interpolant of area V, to within 1e-10 |domain|. Throws RangeError with the
// admissible interval when V is outside [|E^m|, |E^M|].
MinimizerSet solve_for_volume(const CurvatureProblem& problem, const ParallelStructure& structure,
                              double volume);

struct InvariantCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  bool all_pass() const;
};

// Free-boundary arcs have radius r and length at most pi r, every component
// has area at least 4 pi r^2, the witness disk fits, and every disk centred
// on the core lies in the set.
InvariantReport verify_minimizer_invariants(const MinimizerSet& set, const CurvatureProblem& problem);

bool contains(const MinimizerSet& set, Point p);

// Area and perimeter of (core of `inclusion`) + disk of radius inclusion.r
// by the Steiner formulas alone, without building the region.
struct SteinerMeasures {
  double volume = 0.0;
  double perimeter = 0.0;
};
SteinerMeasures steiner_measures(const MedialGraph& graph, const Inclusion& inclusion);

}  // namespace cheeger

#endif  // CHEEGER_MINIMIZERS_HPP_
