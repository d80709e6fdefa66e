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

#ifndef CHEEGER_ERRORS_HPP_
#define CHEEGER_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace cheeger {

// Malformed or unsupported input (non-simple polygon, parse failure, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside the domain of an operation (r <= 0, t outside [0,1]).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Broken internal structure: an open chain, a non-tree medial graph, a
// Steiner mismatch.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The offset of a set by a disk self-intersects, i.e. the set has reach
// smaller than the offset radius.
class ReachViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested value lies outside the admissible interval [lo, hi].
class RangeError : public std::out_of_range {
 public:
  RangeError(const std::string& what, double lo, double hi)
      : std::out_of_range(what), lo_(lo), hi_(hi) {}
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

// The hypotheses of the geometric characterization do not hold, so no
// answer is produced. Carries the radius band in which the domain has necks
// when that is the cause (band_lo < 0 otherwise).
class CharacterizationInapplicable : public std::runtime_error {
 public:
  explicit CharacterizationInapplicable(const std::string& what,
                                        double band_lo = -1.0,
                                        double band_hi = -1.0)
      : std::runtime_error(what), band_lo_(band_lo), band_hi_(band_hi) {}
  double band_lo() const { return band_lo_; }
  double band_hi() const { return band_hi_; }
  bool has_band() const { return band_lo_ >= 0.0; }

 private:
  double band_lo_;
  double band_hi_;
};

// kappa < h: the only minimizer of the prescribed-curvature functional is
// the empty set.
class SubcriticalCurvature : public CharacterizationInapplicable {
 public:
  SubcriticalCurvature(double kappa, double h)
      : CharacterizationInapplicable(
            "curvature " + std::to_string(kappa) +
            " is below the Cheeger constant " + std::to_string(h) +
            ": the unique minimizer is the empty set"),
        kappa_(kappa),
        h_(h) {}
  double kappa() const { return kappa_; }
  double h() const { return h_; }

 private:
  double kappa_;
  double h_;
};

}  // namespace cheeger

#endif  // CHEEGER_ERRORS_HPP_
