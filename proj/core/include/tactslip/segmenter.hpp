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

#ifndef TACTSLIP_SEGMENTER_HPP
#define TACTSLIP_SEGMENTER_HPP

#include "tactslip/mask.hpp"

namespace tactslip {

// A radius of 0 skips that morphology step.
struct SegmentParams {
  int threshold = 25;
  int open_radius = 1;
  int close_radius = 2;
};

// Foreground where |frame - reference| >= threshold, before any cleanup.
// Throws InvalidArgument on a dimension mismatch.
BinaryMask threshold_difference(const GrayFrame& frame,
                                const GrayFrame& reference, int threshold);

// Contact region by differencing against a no-contact reference: threshold,
// open, close, then keep the largest 8-connected component.
BinaryMask segment_diff(const GrayFrame& frame, const GrayFrame& reference,
                        const SegmentParams& params = {});

}  // namespace tactslip

#endif  // TACTSLIP_SEGMENTER_HPP
