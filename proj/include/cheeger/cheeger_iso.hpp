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

#ifndef CHEEGER_CHEEGER_ISO_HPP_
#define CHEEGER_CHEEGER_ISO_HPP_

#include <cstddef>
#include <vector>

#include "cheeger/minimizers.hpp"

namespace cheeger {

struct CheegerResult {
  double h = 0.0;
  double r = 0.0;
  MinimizerSet cheeger_max;
  MinimizerSet cheeger_min;
  // |pi r^2 - |{dist >= r}|| at the root.
  double residual = 0.0;
};

// Cheeger constant from the inner Cheeger equation. Throws
// CharacterizationInapplicable (with the disconnection band) when the domain
// has a neck at the root radius.
CheegerResult solve_cheeger(const Domain& domain);

// G(kappa) = kappa |E^M| - P(E^M) = -min F_kappa, for kappa >= h.
double g_of_kappa(const Domain& domain, double kappa);

struct ProfileRow {
  double volume = 0.0;
  double perimeter = 0.0;
  // Curvature of the minimizer; +inf on the final row (the whole domain).
  double kappa = 0.0;
  double t = 1.0;
  // Volumes of the minimal and maximal minimizers at kappa.
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  // The row lies on a segment where the profile is affine with slope kappa.
  bool affine = false;
  // Between the smallest solved radius and the whole domain; J is
  // interpolated linearly there.
  bool endpoint_interpolated = false;
};

struct GSample {
  double kappa = 0.0;
  double g = 0.0;
};

struct ProfileTable {
  double h = 0.0;
  double v_min = 0.0;
  double v_max = 0.0;
  std::vector<ProfileRow> rows;
  std::vector<GSample> g_samples;
};

// Minimal perimeter at each prescribed volume in [|E^m_h|, |domain|].
// Throws CharacterizationInapplicable when the domain has a neck at some
// radius in (0, 1/h], and RangeError for volumes outside the range.
ProfileTable isoperimetric_profile(const Domain& domain, const std::vector<double>& volumes);

// `samples` volumes spread uniformly over [|E^m_h|, |domain|], plus the ends
// of every affine segment. Grid points that nearly coincide with an inserted
// end are dropped.
std::vector<double> profile_volumes(const Domain& domain, std::size_t samples);

// Divided-difference slopes of the table are nondecreasing up to
// 1e-8 * max(1, |slope|).
bool profile_is_convex(const ProfileTable& table);
bool g_is_convex(const ProfileTable& table);

// max over rows of |J(V) - sup_kappa (kappa V - G(kappa))|, with the sup
// taken over the sampled curvatures and, when `domain` is given, refined by
// golden-section search around the best sample. The last row uses the
// kappa -> infinity limit, which is P(domain).
double legendre_check(const ProfileTable& table, const Domain* domain = nullptr);

}  // namespace cheeger

#endif  // CHEEGER_CHEEGER_ISO_HPP_
