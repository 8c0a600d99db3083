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

#include "tactslip/mask.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "tactslip/error.hpp"

namespace tactslip {

namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("mask dimensions must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
}

std::size_t area(int width, int height) {
  return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

// One-dimensional min/max filter over a row of `n` samples. Samples outside
// [0, n) are background, so erosion needs the whole window in range.
void filter_line(const std::uint8_t* in, std::uint8_t* out, int n, int radius,
                 bool erode, std::vector<int>& prefix) {
  prefix.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + in[i];
  const int full = 2 * radius + 1;
  for (int i = 0; i < n; ++i) {
    const int lo = std::max(0, i - radius);
    const int hi = std::min(n - 1, i + radius);
    const int ones = prefix[hi + 1] - prefix[lo];
    out[i] = erode ? (ones == full ? 1 : 0) : (ones > 0 ? 1 : 0);
  }
}

BinaryMask square_filter(const BinaryMask& mask, int radius, bool erode) {
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask rows(w, h);
  BinaryMask result(w, h);
  std::vector<int> prefix;
  const std::uint8_t* src = mask.data().data();
  std::uint8_t* tmp = rows.data().data();
  for (int r = 0; r < h; ++r) {
    filter_line(src + static_cast<std::ptrdiff_t>(r) * w,
                tmp + static_cast<std::ptrdiff_t>(r) * w, w, radius, erode, prefix);
  }
  // Vertical pass row by row, keeping a running per-column count of the
  // foreground samples inside the window.
  std::uint8_t* dst = result.data().data();
  std::vector<int> counts(static_cast<std::size_t>(w), 0);
  auto accumulate_row = [&](int r, int sign) {
    const std::uint8_t* row = tmp + static_cast<std::ptrdiff_t>(r) * w;
    for (int c = 0; c < w; ++c) counts[c] += sign * row[c];
  };
  for (int r = 0; r < std::min(h, radius); ++r) accumulate_row(r, 1);
  const int full = 2 * radius + 1;
  for (int r = 0; r < h; ++r) {
    if (r + radius < h) accumulate_row(r + radius, 1);
    if (r - radius - 1 >= 0) accumulate_row(r - radius - 1, -1);
    std::uint8_t* out = dst + static_cast<std::ptrdiff_t>(r) * w;
    for (int c = 0; c < w; ++c) {
      out[c] = erode ? (counts[c] == full ? 1 : 0) : (counts[c] > 0 ? 1 : 0);
    }
  }
  return result;
}

}  // namespace

BinaryMask::BinaryMask(int width, int height)
    : width_(width), height_(height) {
  check_dims(width, height);
  pixels_.assign(area(width, height), 0);
}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != area(width, height)) {
    throw InvalidArgument("mask storage size does not match dimensions");
  }
  for (auto& p : pixels_) p = p ? 1 : 0;
}

BinaryMask BinaryMask::from_pixels(int width, int height,
                                   std::span<const Pixel> foreground) {
  BinaryMask mask(width, height);
  for (const Pixel& p : foreground) {
    if (!mask.contains(p.row, p.col)) {
      throw InvalidArgument("pixel (" + std::to_string(p.row) + ", " +
                            std::to_string(p.col) + ") outside the mask");
    }
    mask.set(p.row, p.col, true);
  }
  return mask;
}

std::size_t BinaryMask::count() const noexcept {
  return static_cast<std::size_t>(
      std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1}));
}

std::vector<Pixel> BinaryMask::foreground() const {
  std::vector<Pixel> out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (at(r, c)) out.push_back({r, c});
    }
  }
  return out;
}

BinaryMask BinaryMask::transposed() const {
  BinaryMask out(height_, width_);
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) out.set(c, r, at(r, c));
  }
  return out;
}

GrayFrame::GrayFrame(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  intensity_.assign(area(width, height), fill);
}

GrayFrame::GrayFrame(int width, int height, std::vector<std::uint8_t> intensity)
    : width_(width), height_(height), intensity_(std::move(intensity)) {
  check_dims(width, height);
  if (intensity_.size() != area(width, height)) {
    throw InvalidArgument("frame storage size does not match dimensions");
  }
}

std::vector<Component> connected_components(const BinaryMask& mask,
                                            Connectivity connectivity) {
  static constexpr std::array<Pixel, 8> kOffsets = {{{-1, 0},
                                                     {0, -1},
                                                     {0, 1},
                                                     {1, 0},
                                                     {-1, -1},
                                                     {-1, 1},
                                                     {1, -1},
                                                     {1, 1}}};
  const std::size_t neighbours = connectivity == Connectivity::Four ? 4 : 8;
  const int w = mask.width();
  const int h = mask.height();
  std::vector<std::uint8_t> seen(mask.size(), 0);
  std::vector<Component> components;
  std::vector<Pixel> stack;

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const std::size_t idx = static_cast<std::size_t>(r) * w + c;
      if (!mask.at(r, c) || seen[idx]) continue;
      Component comp;
      seen[idx] = 1;
      stack.push_back({r, c});
      while (!stack.empty()) {
        const Pixel p = stack.back();
        stack.pop_back();
        comp.pixels.push_back(p);
        for (std::size_t k = 0; k < neighbours; ++k) {
          const int nr = p.row + kOffsets[k].row;
          const int nc = p.col + kOffsets[k].col;
          if (!mask.get(nr, nc)) continue;
          const std::size_t nidx = static_cast<std::size_t>(nr) * w + nc;
          if (seen[nidx]) continue;
          seen[nidx] = 1;
          stack.push_back({nr, nc});
        }
      }
      std::sort(comp.pixels.begin(), comp.pixels.end());
      components.push_back(std::move(comp));
    }
  }
  // Components were discovered in raster order of their top-left pixel, so a
  // stable sort on size keeps the tie-break.
  std::stable_sort(components.begin(), components.end(),
                   [](const Component& a, const Component& b) {
                     return a.size() > b.size();
                   });
  return components;
}

BinaryMask largest_component(const BinaryMask& mask,
                             Connectivity connectivity) {
  auto components = connected_components(mask, connectivity);
  if (components.empty()) return BinaryMask(mask.width(), mask.height());
  return BinaryMask::from_pixels(mask.width(), mask.height(),
                                 components.front().pixels);
}

std::size_t count_components(const BinaryMask& mask,
                             Connectivity connectivity) {
  return connected_components(mask, connectivity).size();
}

BinaryMask morph(const BinaryMask& mask, MorphOp op, int radius) {
  if (radius < 1) {
    throw InvalidArgument("morphology radius must be >= 1, got " +
                          std::to_string(radius));
  }
  switch (op) {
    case MorphOp::Erode:
      return square_filter(mask, radius, true);
    case MorphOp::Dilate:
      return square_filter(mask, radius, false);
    case MorphOp::Open:
      return square_filter(square_filter(mask, radius, true), radius, false);
    case MorphOp::Close:
      return square_filter(square_filter(mask, radius, false), radius, true);
  }
  throw InvalidArgument("unknown morphology operation");
}

std::vector<Pixel> boundary_pixels(const BinaryMask& mask) {
  std::vector<Pixel> out;
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < mask.width(); ++c) {
      if (!mask.at(r, c)) continue;
      if (!mask.get(r - 1, c) || !mask.get(r + 1, c) || !mask.get(r, c - 1) ||
          !mask.get(r, c + 1)) {
        out.push_back({r, c});
      }
    }
  }
  return out;
}

}  // namespace tactslip
