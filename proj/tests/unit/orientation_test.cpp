// Copyright 2026 The tactslip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tactslip/error.hpp"
#include "tactslip/orientation.hpp"
#include "tactslip/synth.hpp"

namespace tactslip {
namespace {

BinaryMask block(int w, int h, int top, int left, int rows, int cols) {
  BinaryMask m(w, h);
  for (int r = top; r < top + rows; ++r) {
    for (int c = left; c < left + cols; ++c) m.set(r, c, true);
  }
  return m;
}

double axis_gap(double a, double b) {
  return std::abs(reduce_axis_deg(a - b));
}

BinaryMask capsule(double angle, double length = 60, double width = 20) {
  return synth::rasterize(synth::ShapeSpec::centered(
      synth::ShapeKind::Capsule, length, width, angle, 160, 160));
}

TEST(ReduceAxis, Range) {
  EXPECT_EQ(reduce_axis_deg(90.0), 90.0);
  EXPECT_EQ(reduce_axis_deg(-90.0), 90.0);
  EXPECT_EQ(reduce_axis_deg(180.0), 0.0);
  EXPECT_FALSE(std::signbit(reduce_axis_deg(-180.0)));
  EXPECT_DOUBLE_EQ(reduce_axis_deg(92.0), -88.0);
  EXPECT_DOUBLE_EQ(reduce_axis_deg(-271.0), 89.0);
}

TEST(RegionMoments, SinglePixel) {
  const std::vector<Pixel> px = {{3, 5}};
  const MomentSet m = region_moments(BinaryMask::from_pixels(8, 8, px));
  EXPECT_EQ(m.m00, 1.0);
  EXPECT_EQ(m.centroid_x, 5.0);
  EXPECT_EQ(m.centroid_y, 3.0);
  EXPECT_EQ(m.mu20, 0.0);
  EXPECT_EQ(m.mu02, 0.0);
  EXPECT_EQ(m.mu11, 0.0);
}

TEST(RegionMoments, TwoPixels) {
  const std::vector<Pixel> px = {{0, 0}, {0, 2}};
  const MomentSet m = region_moments(BinaryMask::from_pixels(4, 4, px));
  EXPECT_EQ(m.centroid_x, 1.0);
  EXPECT_EQ(m.mu20, 2.0);
  EXPECT_EQ(m.mu02, 0.0);
  EXPECT_EQ(m.mu11, 0.0);
}

TEST(RegionMoments, EmptyIsZero) {
  const MomentSet m = region_moments(BinaryMask(4, 4));
  EXPECT_EQ(m.m00, 0.0);
  EXPECT_EQ(m.mu20, 0.0);
}

TEST(RegionMoments, MatchesBruteForce) {
  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMask m(20, 20);
    while (m.count() < 50) {
      m.set(static_cast<int>(rng() % 20), static_cast<int>(rng() % 20), true);
    }
    const MomentSet got = region_moments(m);
    const oracle::Moments want = oracle::moments(m);
    EXPECT_EQ(got.m00, want.m00);
    EXPECT_NEAR(got.centroid_x, want.cx, 1e-12);
    EXPECT_NEAR(got.centroid_y, want.cy, 1e-12);
    EXPECT_NEAR(got.mu20, want.mu20, 1e-9);
    EXPECT_NEAR(got.mu02, want.mu02, 1e-9);
    EXPECT_NEAR(got.mu11, want.mu11, 1e-9);
  }
}

TEST(Pca, AxisAlignedRectangles) {
  const AngleEstimate h = pca_orientation(block(20, 20, 5, 5, 3, 9));
  EXPECT_TRUE(h.valid);
  EXPECT_EQ(h.angle_deg, 0.0);
  const AngleEstimate v = pca_orientation(block(20, 20, 5, 5, 9, 3));
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.angle_deg, 90.0);
}

TEST(Pca, SquareIsInvalid) {
  const AngleEstimate e = pca_orientation(block(20, 20, 4, 4, 11, 11));
  EXPECT_FALSE(e.valid);
  EXPECT_DOUBLE_EQ(e.elongation, 1.0);
}

TEST(Pca, TinyRegionIsInvalid) {
  EXPECT_FALSE(pca_orientation(block(20, 20, 4, 4, 1, 10)).valid);
}

TEST(Pca, Capsule30) {
  const AngleEstimate e = pca_orientation(capsule(30.0));
  EXPECT_TRUE(e.valid);
  EXPECT_NEAR(e.angle_deg, 30.0, 0.5);
}

TEST(Skeleton, RowOfPoints) {
  Skeleton s{10, 10, {}};
  for (int c = 0; c <= 8; ++c) s.points.push_back({4, c});
  const AngleEstimate e = skeleton_orientation(s);
  EXPECT_TRUE(e.valid);
  EXPECT_EQ(e.angle_deg, 0.0);
}

TEST(Skeleton, Diagonal) {
  const Skeleton s{4, 4, {{0, 0}, {1, 1}, {2, 2}}};
  const AngleEstimate e = skeleton_orientation(s);
  EXPECT_TRUE(e.valid);
  EXPECT_NEAR(e.angle_deg, 45.0, 1e-12);
}

TEST(Skeleton, FewerThanTwoPointsInvalid) {
  EXPECT_FALSE(skeleton_orientation(Skeleton{4, 4, {{1, 1}}}).valid);
  EXPECT_FALSE(skeleton_orientation(Skeleton{4, 4, {}}).valid);
}

TEST(Skeleton, Capsule30) {
  const AngleEstimate e = skeleton_orientation(thin(capsule(30.0)));
  EXPECT_TRUE(e.valid);
  EXPECT_NEAR(e.angle_deg, 30.0, 0.5);
}

TEST(Ellipse, AxisAlignedRectangle) {
  const AngleEstimate e = ellipse_orientation(block(30, 20, 5, 5, 5, 15));
  EXPECT_TRUE(e.valid);
  EXPECT_NEAR(e.angle_deg, 0.0, 1.0);
}

TEST(Ellipse, FivePointsIsUnderdetermined) {
  const std::vector<Pixel> px = {{0, 2}, {1, 0}, {1, 4}, {3, 1}, {3, 3}};
  EXPECT_FALSE(fit_ellipse(px).has_value());
  EXPECT_FALSE(ellipse_orientation(BinaryMask::from_pixels(6, 6, px)).valid);
}

TEST(Ellipse, Capsule60) {
  const AngleEstimate e = ellipse_orientation(capsule(60.0));
  EXPECT_TRUE(e.valid);
  EXPECT_NEAR(e.angle_deg, 60.0, 1.0);
}

TEST(Ellipse, RecoversAnalyticConic) {
  // Points sampled on x^2/100 + y^2/16 = 1 rotated by 25 degrees.
  std::vector<Pixel> px;
  for (int k = 0; k < 40; ++k) {
    const double t = 2.0 * M_PI * k / 40.0;
    const double u = 10.0 * std::cos(t), v = 4.0 * std::sin(t);
    const double a = 25.0 * M_PI / 180.0;
    px.push_back({static_cast<int>(std::lround(50 + u * std::sin(a) + v * std::cos(a))),
                  static_cast<int>(std::lround(50 + u * std::cos(a) - v * std::sin(a)))});
  }
  const auto conic = fit_ellipse(px);
  ASSERT_TRUE(conic.has_value());
  EXPECT_GT(4 * conic->a * conic->c - conic->b * conic->b, 0.0);
}

TEST(Estimator, ParseRoundTrip) {
  for (auto e : {Estimator::Skeleton, Estimator::Pca, Estimator::Ellipse}) {
    EXPECT_EQ(parse_estimator(to_string(e)), e);
  }
  EXPECT_THROW(parse_estimator("hough"), InvalidArgument);
}

TEST(OrientationProperty, TranslationInvariance) {
  for (auto est : {Estimator::Skeleton, Estimator::Pca, Estimator::Ellipse}) {
    const auto base = synth::ShapeSpec::centered(synth::ShapeKind::Capsule, 50,
                                                 20, 23.0, 200, 200);
    auto moved = base;
    moved.center_x += 37;
    moved.center_y -= 21;
    const auto a = estimate_orientation(synth::rasterize(base), est);
    const auto b = estimate_orientation(synth::rasterize(moved), est);
    ASSERT_TRUE(a.valid);
    EXPECT_NEAR(a.angle_deg, b.angle_deg, 1e-9) << to_string(est);
  }
}

TEST(OrientationProperty, DiscsAndSquaresInvalid) {
  for (double ang = -85.0; ang <= 90.0; ang += 17.5) {
    for (auto est : {Estimator::Skeleton, Estimator::Pca, Estimator::Ellipse}) {
      const auto disc = synth::rasterize(synth::ShapeSpec::centered(
          synth::ShapeKind::Disc, 30, 30, ang, 80, 80));
      const auto square = synth::rasterize(synth::ShapeSpec::centered(
          synth::ShapeKind::Rectangle, 30, 30, ang, 80, 80));
      EXPECT_FALSE(estimate_orientation(disc, est).valid) << ang;
      EXPECT_FALSE(estimate_orientation(square, est).valid) << ang;
    }
  }
}

TEST(OrientationProperty, PcaEquivariantOnCapsules) {
  for (double delta = -60.0; delta <= 60.0; delta += 5.0) {
    const auto e0 = pca_orientation(capsule(10.0));
    const auto e1 = pca_orientation(capsule(10.0 + delta));
    ASSERT_TRUE(e0.valid && e1.valid);
    EXPECT_LE(axis_gap(e1.angle_deg - e0.angle_deg, delta), 1.0) << delta;
  }
}

}  // namespace
}  // namespace tactslip
