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

#include "tactslip/orientation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "tactslip/error.hpp"

namespace tactslip {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;
// Floor for the minor eigenvalue (pixel^2) so a perfectly straight point set
// still reports a finite elongation.
constexpr double kMinEigen = 1e-9;

struct Eigen2 {
  double major = 0.0;
  double minor = 0.0;
};

Eigen2 symmetric_eigenvalues(double a, double b, double c) {
  const double mean = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), b);
  return {mean + radius, mean - radius};
}

double elongation_of(const Eigen2& ev) {
  if (!(ev.major > 0.0)) return 1.0;
  return std::max(1.0, std::sqrt(ev.major / std::max(ev.minor, kMinEigen)));
}

AngleEstimate invalid_estimate(double elongation = 1.0) {
  return AngleEstimate{0.0, elongation, false};
}

// Moments over integer coordinates. Sums are exact and taken relative to the
// first point, so a translated point set produces bit-identical moments.
MomentSet moments_of(std::span<const Pixel> points) {
  MomentSet m;
  if (points.empty()) return m;
  const Pixel origin = points.front();
  std::int64_t sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (const Pixel& p : points) {
    const std::int64_t x = p.col - origin.col;
    const std::int64_t y = p.row - origin.row;
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  const double mx = static_cast<double>(sx) / n;
  const double my = static_cast<double>(sy) / n;
  m.m00 = n;
  m.centroid_x = origin.col + mx;
  m.centroid_y = origin.row + my;
  m.mu20 = std::max(0.0, static_cast<double>(sxx) - static_cast<double>(sx) * mx);
  m.mu02 = std::max(0.0, static_cast<double>(syy) - static_cast<double>(sy) * my);
  m.mu11 = static_cast<double>(sxy) - static_cast<double>(sx) * my;
  return m;
}

AngleEstimate from_moments(const MomentSet& m, double min_count,
                           const OrientationParams& params) {
  if (m.m00 <= 0.0) return invalid_estimate();
  const Eigen2 ev =
      symmetric_eigenvalues(m.mu20 / m.m00, m.mu11 / m.m00, m.mu02 / m.m00);
  const double elongation = elongation_of(ev);
  if (m.m00 < min_count || elongation < params.circularity_threshold) {
    return invalid_estimate(elongation);
  }
  const double angle =
      0.5 * std::atan2(2.0 * m.mu11, m.mu20 - m.mu02) * kRadToDeg;
  return AngleEstimate{reduce_axis_deg(angle), elongation, true};
}

}  // namespace

double reduce_axis_deg(double angle_deg) noexcept {
  double r = std::fmod(angle_deg, 180.0);
  if (r <= -90.0) r += 180.0;
  if (r > 90.0) r -= 180.0;
  return r + 0.0;  // no negative zero
}

MomentSet region_moments(const BinaryMask& mask) {
  return moments_of(mask.foreground());
}

MomentSet point_moments(std::span<const Pixel> points) {
  return moments_of(points);
}

AngleEstimate pca_orientation(const BinaryMask& mask,
                              const OrientationParams& params) {
  return from_moments(region_moments(mask), params.min_area, params);
}

AngleEstimate skeleton_orientation(const Skeleton& skeleton,
                                   const OrientationParams& params) {
  return from_moments(point_moments(skeleton.points), 2.0, params);
}

std::optional<Conic> fit_ellipse(std::span<const Pixel> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 6) return std::nullopt;

  // Centre and isotropically scale for conditioning. Isotropic scaling keeps
  // the axis directions and ratio of the fitted ellipse unchanged.
  double mx = 0.0, my = 0.0;
  for (const Pixel& p : points) {
    mx += p.col;
    my += p.row;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double spread = 0.0;
  for (const Pixel& p : points) {
    spread += (p.col - mx) * (p.col - mx) + (p.row - my) * (p.row - my);
  }
  const double scale = std::sqrt(spread / static_cast<double>(n));
  if (!(scale > 0.0)) return std::nullopt;

  Eigen::MatrixX3d quad(n, 3);
  Eigen::MatrixX3d lin(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = (points[i].col - mx) / scale;
    const double y = (points[i].row - my) / scale;
    quad.row(i) << x * x, x * y, y * y;
    lin.row(i) << x, y, 1.0;
  }
  // Split scatter matrix; the linear block is eliminated in closed form and
  // the ellipse constraint 4ac - b^2 = 1 leaves a 3x3 eigenproblem.
  const Eigen::Matrix3d s1 = quad.transpose() * quad;
  const Eigen::Matrix3d s2 = quad.transpose() * lin;
  const Eigen::Matrix3d s3 = lin.transpose() * lin;
  Eigen::FullPivLU<Eigen::Matrix3d> s3_lu(s3);
  if (!s3_lu.isInvertible()) return std::nullopt;
  const Eigen::Matrix3d t = -s3_lu.solve(s2.transpose());
  const Eigen::Matrix3d reduced = s1 + s2 * t;
  Eigen::Matrix3d system;
  system.row(0) = reduced.row(2) / 2.0;
  system.row(1) = -reduced.row(1);
  system.row(2) = reduced.row(0) / 2.0;

  Eigen::EigenSolver<Eigen::Matrix3d> solver(system);
  if (solver.info() != Eigen::Success) return std::nullopt;
  const Eigen::Matrix3d vectors = solver.eigenvectors().real();
  std::optional<Eigen::Vector3d> best;
  for (int k = 0; k < 3; ++k) {
    const Eigen::Vector3d v = vectors.col(k);
    if (4.0 * v(0) * v(2) - v(1) * v(1) > 0.0) {
      best = v;
      break;
    }
  }
  if (!best) return std::nullopt;
  const Eigen::Vector3d lin_coeffs = t * *best;

  // Back to pixel coordinates: x' = (x - mx)/s, y' = (y - my)/s.
  const double a = (*best)(0), b = (*best)(1), c = (*best)(2);
  const double d = lin_coeffs(0), e = lin_coeffs(1), f = lin_coeffs(2);
  const double s = scale;
  Conic out;
  out.a = a / (s * s);
  out.b = b / (s * s);
  out.c = c / (s * s);
  out.d = (-2.0 * a * mx - b * my) / (s * s) + d / s;
  out.e = (-2.0 * c * my - b * mx) / (s * s) + e / s;
  out.f = (a * mx * mx + b * mx * my + c * my * my) / (s * s) -
          (d * mx + e * my) / s + f;
  return out;
}

AngleEstimate ellipse_orientation(const BinaryMask& mask,
                                  const OrientationParams& params) {
  const std::vector<Pixel> boundary = boundary_pixels(mask);
  const auto conic = fit_ellipse(boundary);
  if (!conic) return invalid_estimate();
  double a = conic->a, b = conic->b, c = conic->c;
  if (a + c < 0.0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const Eigen2 ev = symmetric_eigenvalues(a, 0.5 * b, c);
  if (!(ev.minor > 0.0)) return invalid_estimate();
  // Semi-axes scale as 1/sqrt(eigenvalue): the major axis belongs to the
  // smaller eigenvalue of the quadratic form.
  const double elongation = std::max(1.0, std::sqrt(ev.major / ev.minor));
  if (static_cast<double>(mask.count()) < params.min_area ||
      elongation < params.circularity_threshold) {
    return invalid_estimate(elongation);
  }
  const double angle = 0.5 * std::atan2(b, a - c) * kRadToDeg + 90.0;
  return AngleEstimate{reduce_axis_deg(angle), elongation, true};
}

std::string_view to_string(Estimator estimator) noexcept {
  switch (estimator) {
    case Estimator::Skeleton:
      return "skeleton";
    case Estimator::Pca:
      return "pca";
    case Estimator::Ellipse:
      return "ellipse";
  }
  return "unknown";
}

Estimator parse_estimator(std::string_view name) {
  if (name == "skeleton") return Estimator::Skeleton;
  if (name == "pca") return Estimator::Pca;
  if (name == "ellipse") return Estimator::Ellipse;
  throw InvalidArgument("unknown estimator '" + std::string(name) +
                        "' (expected skeleton, pca or ellipse)");
}

AngleEstimate estimate_orientation(const BinaryMask& region,
                                   Estimator estimator,
                                   const OrientationParams& params) {
  switch (estimator) {
    case Estimator::Pca:
      return pca_orientation(region, params);
    case Estimator::Ellipse:
      return ellipse_orientation(region, params);
    case Estimator::Skeleton:
      break;
  }
  const AngleEstimate gate = pca_orientation(region, params);
  if (!gate.valid) return gate;
  const AngleEstimate line = skeleton_orientation(thin(region), params);
  if (!line.valid) return invalid_estimate(gate.elongation);
  return AngleEstimate{line.angle_deg, gate.elongation, true};
}

}  // namespace tactslip
