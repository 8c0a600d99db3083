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

#include "tactslip/thinning.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "tactslip/error.hpp"

namespace tactslip {

namespace {

// Bit k of a neighborhood code holds P(k+2): P2=N, P3=NE, P4=E, P5=SE, P6=S,
// P7=SW, P8=W, P9=NW.
struct DeleteTables {
  std::array<std::uint8_t, 256> first{};
  std::array<std::uint8_t, 256> second{};
};

constexpr DeleteTables make_tables() {
  DeleteTables t;
  for (int code = 0; code < 256; ++code) {
    auto p = [code](int n) { return (code >> (n - 2)) & 1; };
    int b = 0;
    int a = 0;
    for (int n = 2; n <= 9; ++n) {
      b += p(n);
      const int next = n == 9 ? 2 : n + 1;
      if (p(n) == 0 && p(next) == 1) ++a;
    }
    const bool common = b >= 2 && b <= 6 && a == 1;
    t.first[code] = common && p(2) * p(4) * p(6) == 0 && p(4) * p(6) * p(8) == 0;
    t.second[code] =
        common && p(2) * p(4) * p(8) == 0 && p(2) * p(6) * p(8) == 0;
  }
  return t;
}

constexpr DeleteTables kTables = make_tables();

// Neighborhood codes of the four pixels of an isolated 2x2 block.
constexpr int kBlockTopLeft = (1 << 2) | (1 << 3) | (1 << 4);      // E, SE, S
constexpr int kBlockTopRight = (1 << 4) | (1 << 5) | (1 << 6);     // S, SW, W
constexpr int kBlockBottomLeft = (1 << 0) | (1 << 1) | (1 << 2);   // N, NE, E
constexpr int kBlockBottomRight = (1 << 0) | (1 << 6) | (1 << 7);  // N, W, NW

}  // namespace

BinaryMask Skeleton::to_mask() const {
  return BinaryMask::from_pixels(source_width, source_height, points);
}

Skeleton Skeleton::from_mask(const BinaryMask& mask) {
  return Skeleton{mask.width(), mask.height(), mask.foreground()};
}

int max_thinning_passes(const BinaryMask& mask) noexcept {
  return 10 * std::max(mask.width(), mask.height());
}

Skeleton thin(const BinaryMask& mask) {
  // One pixel of background padding removes all bounds checks.
  const int w = mask.width();
  const int h = mask.height();
  const std::ptrdiff_t stride = w + 2;
  std::vector<std::uint8_t> img(static_cast<std::size_t>(stride) * (h + 2), 0);
  std::vector<std::ptrdiff_t> alive;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!mask.at(r, c)) continue;
      const std::ptrdiff_t i = (r + 1) * stride + (c + 1);
      img[i] = 1;
      alive.push_back(i);
    }
  }

  const std::array<std::ptrdiff_t, 8> offsets = {
      -stride, -stride + 1, 1, stride + 1, stride, stride - 1, -1, -stride - 1};
  auto code_at = [&](std::ptrdiff_t i) {
    int code = 0;
    for (int k = 0; k < 8; ++k) code |= img[i + offsets[k]] << k;
    return code;
  };

  // Both sub-passes would erase an isolated 2x2 block completely; its top-left
  // pixel is kept so a connected region never thins to nothing.
  auto isolated_block_corner = [&](std::ptrdiff_t i, int code) {
    return code == kBlockTopLeft && code_at(i + 1) == kBlockTopRight &&
           code_at(i + stride) == kBlockBottomLeft &&
           code_at(i + stride + 1) == kBlockBottomRight;
  };

  std::vector<std::ptrdiff_t> doomed;
  auto sub_pass = [&](const std::array<std::uint8_t, 256>& table) {
    doomed.clear();
    for (const std::ptrdiff_t i : alive) {
      const int code = code_at(i);
      if (table[code] && !isolated_block_corner(i, code)) doomed.push_back(i);
    }
    for (const std::ptrdiff_t i : doomed) img[i] = 0;
    if (!doomed.empty()) {
      std::erase_if(alive, [&](std::ptrdiff_t i) { return img[i] == 0; });
    }
    return !doomed.empty();
  };

  const int cap = max_thinning_passes(mask);
  int passes = 0;
  while (true) {
    const bool changed_first = sub_pass(kTables.first);
    const bool changed_second = sub_pass(kTables.second);
    if (!changed_first && !changed_second) break;
    if (++passes > cap) {
      throw InternalError("thinning exceeded its iteration cap of " +
                          std::to_string(cap) + " passes");
    }
  }

  Skeleton skel{w, h, {}};
  skel.points.reserve(alive.size());
  for (const std::ptrdiff_t i : alive) {
    skel.points.push_back({static_cast<int>(i / stride) - 1,
                           static_cast<int>(i % stride) - 1});
  }
  // `alive` started in raster order and erase_if keeps relative order.
  return skel;
}

}  // namespace tactslip
