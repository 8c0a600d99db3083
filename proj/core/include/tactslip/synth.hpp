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

#ifndef TACTSLIP_SYNTH_HPP
#define TACTSLIP_SYNTH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tactslip/config.hpp"
#include "tactslip/mask.hpp"

namespace tactslip::synth {

enum class ShapeKind { Capsule, Rectangle, Ellipse, Disc };

std::string_view to_string(ShapeKind kind) noexcept;
ShapeKind parse_shape_kind(std::string_view name);

// Geometry of a synthetic contact region, in the same image frame as
// AngleEstimate. `length` is the long extent: the central segment for a
// capsule (total length is length + width), the side for a rectangle, the
// full major axis for an ellipse. `width` is the short extent; a disc has
// diameter `width`.
struct ShapeSpec {
  ShapeKind kind = ShapeKind::Capsule;
  double length = 40.0;
  double width = 12.0;
  double center_x = 159.5;
  double center_y = 119.5;
  double angle_deg = 0.0;
  int canvas_width = 320;
  int canvas_height = 240;

  // Shape centred on the canvas, ((W-1)/2, (H-1)/2).
  static ShapeSpec centered(ShapeKind kind, double length, double width,
                            double angle_deg, int canvas_width = 320,
                            int canvas_height = 240);
};

// Throws InvalidArgument unless length >= width >= 1, the canvas is
// non-empty and the rotated shape stays inside it.
void validate(const ShapeSpec& spec);

// Pixel (r, c) is foreground iff its centre (x = c, y = r) lies in the shape.
BinaryMask rasterize(const ShapeSpec& spec);

inline constexpr std::string_view kGeneratorName = "mt19937_64";

struct SequenceSpec {
  ShapeSpec shape;
  std::vector<double> schedule;  // absolute shape angle per frame
  double boundary_noise_p = 0.0;
  double salt_pepper_p = 0.0;  // optional global flips, off by default
  std::uint64_t seed = 0;
};

struct SynthFrame {
  BinaryMask mask;
  double truth_angle_deg;  // schedule value, unaffected by noise
};

// Frame k rasterizes the shape at schedule[k]. Every pixel on either side of
// the clean boundary (4-adjacency) is then flipped with probability
// boundary_noise_p, drawn in raster order from one mt19937_64 stream seeded
// with `seed` that runs across the whole sequence.
std::vector<SynthFrame> gen_sequence(const SequenceSpec& spec);

// start, start+step, ... up to and including stop (within 1e-9).
std::vector<double> linear_schedule(double start, double stop, double step);

// Flat key = value description of a sequence, including seed and generator.
Manifest to_manifest(const SequenceSpec& spec);
SequenceSpec sequence_from_manifest(const Manifest& manifest);

// Smooth deterministic no-contact image and the same image with `delta` added
// (saturating) on the contact region, for exercising the segmenter.
GrayFrame render_reference(int width, int height);
GrayFrame render_contact(const GrayFrame& reference, const BinaryMask& contact,
                         int delta);

// One trial of a slip campaign.
struct Trial {
  std::string label;  // object label, shared by the trials of one shape
  int index = 0;      // trial number within the label
  SequenceSpec sequence;

  std::string name() const;  // "<label>_<index>"
};

// Nine elongated shapes (capsules with aspect ratio 2 to 4, rectangles and
// ellipses with 1.5 to 4) times `trials_per_shape` seeded trials, each rotating the shape
// by +40 degrees in 1 degree steps from a trial-specific start angle.
std::vector<Trial> standard_campaign(double boundary_noise_p,
                                     int trials_per_shape = 5);

}  // namespace tactslip::synth

#endif  // TACTSLIP_SYNTH_HPP
