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

#include <gtest/gtest.h>

#include <cmath>

#include "cheeger/errors.hpp"
#include "cheeger/fixtures.hpp"
#include "cheeger/minimizers.hpp"
#include "generators.hpp"

namespace cheeger {
namespace {

struct Built {
  ParallelStructure ps;
  MinimizerSet emax;
  MinimizerSet emin;
};

Built build(const CurvatureProblem& pb) {
  Built b{structure_for(pb), {}, {}};
  b.emax = maximal_minimizer(pb, b.ps);
  b.emin = minimal_minimizer(pb, b.ps);
  return b;
}

TEST(MaximalMinimizer, SquareKappa5) {
  const Domain d(fixtures::unit_square());
  const CurvatureProblem pb(d, 5.0);
  const Built b = build(pb);
  EXPECT_NEAR(b.emax.volume, 0.9656637061435917, 1e-12);
  EXPECT_NEAR(b.emax.perimeter, 3.6566370614359172, 1e-12);
  EXPECT_NEAR(b.emax.f_value, -1.1716814692820414, 1e-12);
  EXPECT_NEAR(b.emax.region_area, b.emax.volume, 1e-12);
  EXPECT_EQ(b.emax.volume, b.emin.volume);
  const InvariantReport rep = verify_minimizer_invariants(b.emax, pb);
  EXPECT_TRUE(rep.all_pass());
  int arcs = 0;
  for (const ArcEdge& e : b.emax.region.outer_loops.front().edges) {
    if (!e.is_arc()) continue;
    ++arcs;
    EXPECT_NEAR(e.length(), 0.5 * kPi * 0.2, 1e-12);
  }
  EXPECT_EQ(arcs, 4);
}

TEST(MaximalMinimizer, DiskIsWholeDisk) {
  const Domain d(fixtures::disk());
  const Built b = build(CurvatureProblem(d, 2.5));
  EXPECT_NEAR(b.emax.volume, kPi, 1e-3);
  EXPECT_NEAR(b.emax.perimeter, kTwoPi, 1e-3);
  EXPECT_NEAR(b.emax.f_value, -0.5 * kPi, 1e-3);
}

TEST(MaximalMinimizer, CheegerCurvatureHasZeroEnergy) {
  const Domain d(fixtures::unit_square());
  const Built b = build(CurvatureProblem(d, 2.0 + std::sqrt(kPi)));
  EXPECT_LE(std::abs(b.emax.f_value), 1e-9);
}

TEST(MaximalMinimizer, GuardsComeInOrder) {
  const Domain sq(fixtures::unit_square());
  // The parallel set at r = 0.5 is a point; the subcritical guard fires
  // before anything is built from it.
  const CurvatureProblem sub(sq, 2.0);
  EXPECT_THROW(maximal_minimizer(sub, structure_for(sub)), SubcriticalCurvature);
  EXPECT_THROW(CurvatureProblem(sq, 0.0), DomainError);
  EXPECT_THROW(CurvatureProblem(sq, -1.0), DomainError);
  const Domain db(fixtures::dumbbell());
  try {
    const CurvatureProblem pb(db, 5.0);
    maximal_minimizer(pb, structure_for(pb));
    FAIL() << "dumbbell accepted";
  } catch (const CharacterizationInapplicable& e) {
    ASSERT_TRUE(e.has_band());
    EXPECT_NEAR(e.band_lo(), 0.05, 1e-12);
    EXPECT_NEAR(e.band_hi(), 0.5, 1e-12);
  }
}

TEST(MinimalMinimizer, KeyedSquareGap) {
  const Domain d(fixtures::keyed_square());
  const CurvatureProblem pb(d, 10.0);
  const Built b = build(pb);
  ASSERT_EQ(b.ps.tendrils.size(), 1U);
  EXPECT_NEAR(b.emax.volume - b.emin.volume, 0.1, 1e-6);
  EXPECT_NEAR(b.emax.f_value, b.emin.f_value, 1e-12);
  EXPECT_TRUE(verify_minimizer_invariants(b.emin, pb).all_pass());
  EXPECT_TRUE(verify_minimizer_invariants(b.emax, pb).all_pass());
  // Inner square with rounded corners; the tendril strip is missing.
  EXPECT_TRUE(contains(b.emin, {0.5, 0.5}));
  EXPECT_FALSE(contains(b.emin, {1.3, 0.5}));
  EXPECT_TRUE(contains(b.emax, {1.3, 0.5}));
}

TEST(MinimalMinimizer, ShortKeyedSquareGap) {
  const Domain d(fixtures::keyed_square_short());
  const Built b = build(CurvatureProblem(d, 10.0));
  EXPECT_NEAR(b.emax.volume - b.emin.volume, 0.08, 1e-6);
}

TEST(Interpolant, KeyedSquareFamily) {
  const Domain d(fixtures::keyed_square());
  const CurvatureProblem pb(d, 10.0);
  const Built b = build(pb);
  EXPECT_NEAR(interpolant(pb, b.ps, 0.0).volume, b.emin.volume, 1e-12);
  EXPECT_NEAR(interpolant(pb, b.ps, 1.0).volume, b.emax.volume, 1e-12);
  EXPECT_NEAR(interpolant(pb, b.ps, 0.5).volume, b.emin.volume + 0.05, 1e-9);
  EXPECT_THROW(interpolant(pb, b.ps, 1.5), DomainError);
  EXPECT_THROW(interpolant(pb, b.ps, -0.1), DomainError);
}

TEST(SolveForVolume, KeyedSquare) {
  const Domain d(fixtures::keyed_square());
  const CurvatureProblem pb(d, 10.0);
  const Built b = build(pb);
  EXPECT_NEAR(solve_for_volume(pb, b.ps, b.emin.volume + 0.05).t, 0.5, 1e-6);
  EXPECT_EQ(solve_for_volume(pb, b.ps, b.emin.volume).t, 0.0);
  EXPECT_EQ(solve_for_volume(pb, b.ps, b.emax.volume).t, 1.0);
  try {
    solve_for_volume(pb, b.ps, b.emax.volume + 0.01);
    FAIL() << "accepted volume above the interval";
  } catch (const RangeError& e) {
    EXPECT_NEAR(e.lo(), b.emin.volume, 1e-12);
    EXPECT_NEAR(e.hi(), b.emax.volume, 1e-12);
  }
}

TEST(Nestedness, KeyedAcrossTheStepCurvature) {
  const Domain d(fixtures::keyed_square());
  const Built lo = build(CurvatureProblem(d, 10.0));
  const Built hi = build(CurvatureProblem(d, 10.0001));
  testing::Rng rng(51);
  for (int k = 0; k < 5000; ++k) {
    const Point p{testing::uniform(rng, 0, 1.6), testing::uniform(rng, 0, 1)};
    if (contains_point(lo.emax.region, p) == Location::inside) {
      ASSERT_NE(contains_point(hi.emin.region, p), Location::outside) << p.x << "," << p.y;
    }
  }
}

// Fixtures with admissible curvatures, 3 each.
struct Case {
  const char* name;
  double kappa;
};
const Case kCases[] = {{"square", 4.0},   {"square", 5.0},    {"square", 12.0},   {"rectangle", 3.0},
                       {"rectangle", 5.0}, {"rectangle", 9.0}, {"keyed", 6.0},     {"keyed", 10.0},
                       {"keyed", 15.0},    {"ziggurat", 4.0},  {"ziggurat", 8.0},  {"ziggurat", 5.5},
                       {"triangle", 7.0},  {"triangle", 10.0}, {"triangle", 20.0}};

TEST(Property, FamilyHasConstantEnergyAndStripGrowth) {
  for (const Case& c : kCases) {
    const Domain d(fixtures::by_name(c.name));
    const CurvatureProblem pb(d, c.kappa);
    const Built b = build(pb);
    double total = 0.0;
    for (const SkeletonCurve& t : b.ps.tendrils) total += t.length();
    for (int i = 0; i <= 10; ++i) {
      const double t = i / 10.0;
      const MinimizerSet a = interpolant(pb, b.ps, t);
      ASSERT_NEAR(a.f_value, b.emax.f_value, 1e-9 * std::abs(b.emax.f_value)) << c.name << " t=" << t;
      ASSERT_NEAR(a.volume - b.emin.volume, 2.0 * pb.r * t * total, 1e-9) << c.name << " t=" << t;
    }
  }
}

TEST(Property, SteinerMatchesBuiltRegion) {
  for (const Case& c : kCases) {
    const Domain d(fixtures::by_name(c.name));
    const CurvatureProblem pb(d, c.kappa);
    const Built b = build(pb);
    for (const MinimizerSet* s : {&b.emax, &b.emin}) {
      ASSERT_NEAR(s->region_area, s->volume, 1e-9 * s->volume) << c.name;
      ASSERT_NEAR(s->region_perimeter, s->perimeter, 1e-9 * s->perimeter) << c.name;
      ASSERT_TRUE(s->region.hole_loops.empty());
    }
  }
}

TEST(Property, InvariantSuitePasses) {
  for (const Case& c : kCases) {
    const Domain d(fixtures::by_name(c.name));
    const CurvatureProblem pb(d, c.kappa);
    const Built b = build(pb);
    for (const MinimizerSet* s : {&b.emax, &b.emin}) {
      const InvariantReport rep = verify_minimizer_invariants(*s, pb);
      for (const InvariantCheck& chk : rep.checks) ASSERT_TRUE(chk.pass) << c.name << " " << chk.name << " " << chk.detail;
    }
  }
}

TEST(Property, NestedOnCurvatureGrid) {
  testing::Rng rng(52);
  for (const char* name : {"keyed", "ziggurat", "square"}) {
    const Domain d(fixtures::by_name(name));
    const double h = d.cheeger_candidate();
    std::vector<Built> sets;
    for (double f : {1.0, 1.3, 1.8, 2.5, 4.0}) sets.push_back(build(CurvatureProblem(d, f * h)));
    const BoundingBox box = d.polygon().bbox();
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
      const Built& a = sets[i];
      const Built& b = sets[i + 1];
      if (d.polygon().area() > a.emax.volume + 1e-12) ASSERT_GT(b.emin.volume, a.emax.volume) << name;
      for (int k = 0; k < 2000; ++k) {
        const Point p{testing::uniform(rng, box.lo.x, box.hi.x), testing::uniform(rng, box.lo.y, box.hi.y)};
        const bool in_amin = contains_point(a.emin.region, p) == Location::inside;
        const bool in_amax = contains_point(a.emax.region, p) == Location::inside;
        const bool in_bmin = contains_point(b.emin.region, p) == Location::inside;
        ASSERT_TRUE(!in_amin || contains_point(a.emax.region, p) != Location::outside) << name;
        ASSERT_TRUE(!in_amax || contains_point(b.emin.region, p) != Location::outside) << name;
        ASSERT_TRUE(!in_bmin || contains_point(b.emax.region, p) != Location::outside) << name;
      }
    }
  }
}

// Eroding E^M by r gives back the parallel set: compare distances to the
// region boundary with distances to the domain boundary.
TEST(Property, ReErosionRecoversCore) {
  testing::Rng rng(53);
  int tested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Domain d{JordanPolygon(testing::random_star(rng, 6 + trial % 12, 0.5))};
    const double kappa = d.cheeger_candidate() * testing::uniform(rng, 1.0, 3.0);
    Built b;
    try {
      b = build(CurvatureProblem(d, kappa));
    } catch (const CharacterizationInapplicable&) {
      continue;
    }
    ++tested;
    const double r = 1.0 / kappa;
    const double band = 1e-6 * d.polygon().bbox().diagonal();
    const BoundingBox box = d.polygon().bbox();
    for (int k = 0; k < 300; ++k) {
      const Point p{testing::uniform(rng, box.lo.x, box.hi.x), testing::uniform(rng, box.lo.y, box.hi.y)};
      if (d.polygon().locate(p) != Location::inside) continue;
      const bool in_core = d.polygon().distance_to_boundary(p) >= r;
      const bool inside_region = contains_point(b.emax.region, p) == Location::inside;
      const double dr = inside_region ? distance_to_boundary(b.emax.region, p) : 0.0;
      if (std::abs(d.polygon().distance_to_boundary(p) - r) < band || std::abs(dr - r) < band) continue;
      ASSERT_EQ(in_core, dr >= r) << "trial " << trial;
    }
    for (const MinimizerSet* s : {&b.emax, &b.emin}) {
      ASSERT_NEAR(s->region_area, s->volume, 1e-9 * s->volume) << "trial " << trial;
    }
  }
  EXPECT_GT(tested, 10);
}

}  // namespace
}  // namespace cheeger
