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

#ifndef TACTSLIP_THINNING_HPP
#define TACTSLIP_THINNING_HPP

#include <vector>

#include "tactslip/mask.hpp"

namespace tactslip {

// One-pixel-thick remainder of a contact region.
struct Skeleton {
  int source_width = 0;
  int source_height = 0;
  std::vector<Pixel> points;  // raster order

  BinaryMask to_mask() const;
  static Skeleton from_mask(const BinaryMask& mask);

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

// Two-subiteration parallel thinning over the 8-neighborhood.
//
// Neighbors of p are labelled P2..P9 clockwise from north. With B(p) the
// number of foreground neighbors and A(p) the number of 0->1 transitions in
// P2,P3,...,P9,P2, a foreground pixel is deleted when 2 <= B(p) <= 6,
// A(p) == 1 and
//   first sub-pass:  P2*P4*P6 == 0 and P4*P6*P8 == 0
//   second sub-pass: P2*P4*P8 == 0 and P2*P6*P8 == 0.
// All decisions of a sub-pass read the image as it was before that sub-pass.
// Passes repeat until neither sub-pass deletes anything.
//
// The plain rules delete all four pixels of an isolated 2x2 block at once; the
// block's top-left pixel is exempt, so every 8-connected component of the
// input keeps at least one skeleton pixel.
//
// Throws InternalError if more than max_thinning_passes() passes run.
Skeleton thin(const BinaryMask& mask);

int max_thinning_passes(const BinaryMask& mask) noexcept;

}  // namespace tactslip

#endif  // TACTSLIP_THINNING_HPP
