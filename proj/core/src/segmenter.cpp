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

#include "tactslip/segmenter.hpp"

#include <cstdlib>
#include <string>

#include "tactslip/error.hpp"

namespace tactslip {

BinaryMask threshold_difference(const GrayFrame& frame,
                                const GrayFrame& reference, int threshold) {
  if (frame.width() != reference.width() ||
      frame.height() != reference.height()) {
    throw InvalidArgument(
        "frame is " + std::to_string(frame.width()) + "x" +
        std::to_string(frame.height()) + " but reference is " +
        std::to_string(reference.width()) + "x" +
        std::to_string(reference.height()));
  }
  if (threshold < 0 || threshold > 255) {
    throw InvalidArgument("threshold must be in [0, 255], got " +
                          std::to_string(threshold));
  }
  BinaryMask mask(frame.width(), frame.height());
  const auto a = frame.data();
  const auto b = reference.data();
  auto out = mask.data();
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::abs(int{a[i]} - int{b[i]}) >= threshold ? 1 : 0;
  }
  return mask;
}

BinaryMask segment_diff(const GrayFrame& frame, const GrayFrame& reference,
                        const SegmentParams& params) {
  if (params.open_radius < 0 || params.close_radius < 0) {
    throw InvalidArgument("segmentation radii must be >= 0");
  }
  BinaryMask mask = threshold_difference(frame, reference, params.threshold);
  if (params.open_radius > 0) {
    mask = morph(mask, MorphOp::Open, params.open_radius);
  }
  if (params.close_radius > 0) {
    mask = morph(mask, MorphOp::Close, params.close_radius);
  }
  return largest_component(mask, Connectivity::Eight);
}

}  // namespace tactslip
