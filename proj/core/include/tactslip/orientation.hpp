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

#ifndef TACTSLIP_ORIENTATION_HPP
#define TACTSLIP_ORIENTATION_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "tactslip/mask.hpp"
#include "tactslip/thinning.hpp"

namespace tactslip {

// Angles live in the image frame: x is the column axis (rightward), y the row
// axis (downward), positive angles turn +x toward +y. An orientation is an
// axis, so it is reported modulo 180 in (-90, 90].
struct AngleEstimate {
  double angle_deg = 0.0;
  double elongation = 1.0;  // sqrt(major / minor second-moment eigenvalue)
  bool valid = false;
};

struct MomentSet {
  double m00 = 0.0;
  double centroid_x = 0.0;
  double centroid_y = 0.0;
  double mu20 = 0.0;
  double mu02 = 0.0;
  double mu11 = 0.0;
};

struct OrientationParams {
  double circularity_threshold = 1.3;  // elongation below this is too round
  double min_area = 20.0;              // pixels
};

// Reduces any angle to the axis range (-90, 90].
double reduce_axis_deg(double angle_deg) noexcept;

// Moments over pixel centers (x = col, y = row). Empty input gives all zeros.
MomentSet region_moments(const BinaryMask& mask);
MomentSet point_moments(std::span<const Pixel> points);

// Principal axis of the central second moments. An invalid estimate always has
// angle_deg == 0.
AngleEstimate pca_orientation(const BinaryMask& mask,
                              const OrientationParams& params = {});

// Total-least-squares line through the skeleton points. Needs at least two
// points; the area gate does not apply to a bare skeleton.
AngleEstimate skeleton_orientation(const Skeleton& skeleton,
                                   const OrientationParams& params = {});

// Ellipse-specific direct least-squares conic fitted to the region boundary.
AngleEstimate ellipse_orientation(const BinaryMask& mask,
                                  const OrientationParams& params = {});

// General conic a x^2 + b xy + c y^2 + d x + e y + f = 0 in the coordinates
// the points were given in.
struct Conic {
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

// Direct least-squares ellipse fit (constraint 4ac - b^2 = 1). Returns nullopt
// for fewer than six points or a degenerate scatter.
std::optional<Conic> fit_ellipse(std::span<const Pixel> points);

enum class Estimator { Skeleton, Pca, Ellipse };

std::string_view to_string(Estimator estimator) noexcept;
// Accepts "skeleton", "pca", "ellipse"; throws InvalidArgument otherwise.
Estimator parse_estimator(std::string_view name);

// Pipeline-level estimate for one contact region. The skeleton estimator thins
// the mask and takes its angle from the skeleton line fit, but validity and the
// reported elongation come from the region itself: a round region can thin to
// a perfectly straight skeleton.
AngleEstimate estimate_orientation(const BinaryMask& region, Estimator estimator,
                                   const OrientationParams& params = {});

}  // namespace tactslip

#endif  // TACTSLIP_ORIENTATION_HPP
