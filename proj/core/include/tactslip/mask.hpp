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

#ifndef TACTSLIP_MASK_HPP
#define TACTSLIP_MASK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tactslip {

// Pixel coordinate. Ordering is lexicographic (row, then column), i.e. raster
// order.
struct Pixel {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Pixel&, const Pixel&) = default;
};

// Row-major boolean grid; true marks the contact region (foreground).
class BinaryMask {
 public:
  // Throws InvalidArgument unless width >= 1 and height >= 1.
  BinaryMask(int width, int height);
  BinaryMask(int width, int height, std::vector<std::uint8_t> pixels);

  static BinaryMask from_pixels(int width, int height,
                                std::span<const Pixel> foreground);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  bool contains(int row, int col) const noexcept {
    return row >= 0 && col >= 0 && row < height_ && col < width_;
  }
  bool at(int row, int col) const noexcept {
    return pixels_[index(row, col)] != 0;
  }
  // Out-of-grid reads return background.
  bool get(int row, int col) const noexcept {
    return contains(row, col) && at(row, col);
  }
  void set(int row, int col, bool value) noexcept {
    pixels_[index(row, col)] = value ? 1 : 0;
  }

  // One byte per pixel, 0 or 1.
  std::span<const std::uint8_t> data() const noexcept { return pixels_; }
  std::span<std::uint8_t> data() noexcept { return pixels_; }

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<Pixel> foreground() const;
  BinaryMask transposed() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// Row-major 8-bit intensity image (a raw tactile frame or reference).
class GrayFrame {
 public:
  GrayFrame(int width, int height, std::uint8_t fill = 0);
  GrayFrame(int width, int height, std::vector<std::uint8_t> intensity);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::uint8_t at(int row, int col) const noexcept {
    return intensity_[static_cast<std::size_t>(row) * width_ + col];
  }
  void set(int row, int col, std::uint8_t value) noexcept {
    intensity_[static_cast<std::size_t>(row) * width_ + col] = value;
  }
  std::span<const std::uint8_t> data() const noexcept { return intensity_; }
  std::span<std::uint8_t> data() noexcept { return intensity_; }

  friend bool operator==(const GrayFrame&, const GrayFrame&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> intensity_;
};

enum class Connectivity { Four = 4, Eight = 8 };

struct Component {
  std::vector<Pixel> pixels;  // raster order; pixels.front() is the top-left
  std::size_t size() const noexcept { return pixels.size(); }
};

// Maximal components under the given adjacency, sorted by size descending and
// then by top-left pixel.
std::vector<Component> connected_components(const BinaryMask& mask,
                                            Connectivity connectivity);

// Empty input gives an empty mask of the same dimensions.
BinaryMask largest_component(const BinaryMask& mask, Connectivity connectivity);

std::size_t count_components(const BinaryMask& mask, Connectivity connectivity);

enum class MorphOp { Erode, Dilate, Open, Close };

// Square structuring element of side 2*radius+1; out-of-grid pixels are
// background. Throws InvalidArgument for radius < 1.
BinaryMask morph(const BinaryMask& mask, MorphOp op, int radius);

// Foreground pixels with at least one background 4-neighbor (the grid border
// counts as background), in raster order.
std::vector<Pixel> boundary_pixels(const BinaryMask& mask);

}  // namespace tactslip

#endif  // TACTSLIP_MASK_HPP
