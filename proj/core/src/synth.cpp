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

#include "tactslip/synth.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "tactslip/error.hpp"

namespace tactslip::synth {

namespace {

struct SinCos {
  double sin;
  double cos;
};

// Exact at multiples of 90 degrees so axis-aligned rasters are symmetric.
SinCos sincos_deg(double angle_deg) {
  const double q = angle_deg / 90.0;
  if (q == std::floor(q)) {
    const long long k = static_cast<long long>(q);
    switch (((k % 4) + 4) % 4) {
      case 0:
        return {0.0, 1.0};
      case 1:
        return {1.0, 0.0};
      case 2:
        return {0.0, -1.0};
      default:
        return {-1.0, 0.0};
    }
  }
  const double rad = angle_deg * std::numbers::pi / 180.0;
  return {std::sin(rad), std::cos(rad)};
}

struct Extent {
  double x;
  double y;
};

Extent half_extent(const ShapeSpec& s) {
  const SinCos t = sincos_deg(s.angle_deg);
  const double c = std::abs(t.cos);
  const double n = std::abs(t.sin);
  const double hl = 0.5 * s.length;
  const double hw = 0.5 * s.width;
  switch (s.kind) {
    case ShapeKind::Capsule:
      return {hl * c + hw, hl * n + hw};
    case ShapeKind::Rectangle:
      return {hl * c + hw * n, hl * n + hw * c};
    case ShapeKind::Ellipse:
      return {std::hypot(hl * c, hw * n), std::hypot(hl * n, hw * c)};
    case ShapeKind::Disc:
      return {hw, hw};
  }
  return {0.0, 0.0};
}

bool inside(const ShapeSpec& s, double u, double v) {
  const double hl = 0.5 * s.length;
  const double hw = 0.5 * s.width;
  switch (s.kind) {
    case ShapeKind::Capsule: {
      const double du = std::max(std::abs(u) - hl, 0.0);
      return du * du + v * v <= hw * hw;
    }
    case ShapeKind::Rectangle:
      return std::abs(u) <= hl && std::abs(v) <= hw;
    case ShapeKind::Ellipse:
      return (u * u) / (hl * hl) + (v * v) / (hw * hw) <= 1.0;
    case ShapeKind::Disc:
      return u * u + v * v <= hw * hw;
  }
  return false;
}

// Uniform [0, 1) from the top 53 bits, independent of the standard library's
// distribution implementations.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string join_schedule(const std::vector<double>& schedule) {
  std::string out;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (i) out += ',';
    out += format_double(schedule[i]);
  }
  return out;
}

std::vector<double> split_schedule(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_double(item));
  return out;
}

}  // namespace

std::string_view to_string(ShapeKind kind) noexcept {
  switch (kind) {
    case ShapeKind::Capsule:
      return "capsule";
    case ShapeKind::Rectangle:
      return "rectangle";
    case ShapeKind::Ellipse:
      return "ellipse";
    case ShapeKind::Disc:
      return "disc";
  }
  return "unknown";
}

ShapeKind parse_shape_kind(std::string_view name) {
  if (name == "capsule") return ShapeKind::Capsule;
  if (name == "rectangle") return ShapeKind::Rectangle;
  if (name == "ellipse") return ShapeKind::Ellipse;
  if (name == "disc") return ShapeKind::Disc;
  throw InvalidArgument("unknown shape kind '" + std::string(name) + "'");
}

ShapeSpec ShapeSpec::centered(ShapeKind kind, double length, double width,
                              double angle_deg, int canvas_width,
                              int canvas_height) {
  return ShapeSpec{kind,
                   length,
                   width,
                   0.5 * (canvas_width - 1),
                   0.5 * (canvas_height - 1),
                   angle_deg,
                   canvas_width,
                   canvas_height};
}

void validate(const ShapeSpec& spec) {
  if (spec.canvas_width < 1 || spec.canvas_height < 1) {
    throw InvalidArgument("canvas must be at least 1x1");
  }
  if (!(spec.width >= 1.0) || !(spec.length >= spec.width)) {
    throw InvalidArgument("shape needs length >= width >= 1");
  }
  const Extent e = half_extent(spec);
  if (spec.center_x - e.x < -0.5 || spec.center_x + e.x > spec.canvas_width - 0.5 ||
      spec.center_y - e.y < -0.5 ||
      spec.center_y + e.y > spec.canvas_height - 0.5) {
    throw InvalidArgument("rotated " + std::string(to_string(spec.kind)) +
                          " does not fit the " +
                          std::to_string(spec.canvas_width) + "x" +
                          std::to_string(spec.canvas_height) + " canvas");
  }
}

BinaryMask rasterize(const ShapeSpec& spec) {
  validate(spec);
  BinaryMask mask(spec.canvas_width, spec.canvas_height);
  const SinCos t = sincos_deg(spec.angle_deg);
  const Extent e = half_extent(spec);
  const int r0 = std::max(0, static_cast<int>(std::floor(spec.center_y - e.y)));
  const int r1 = std::min(spec.canvas_height - 1,
                          static_cast<int>(std::ceil(spec.center_y + e.y)));
  const int c0 = std::max(0, static_cast<int>(std::floor(spec.center_x - e.x)));
  const int c1 = std::min(spec.canvas_width - 1,
                          static_cast<int>(std::ceil(spec.center_x + e.x)));
  for (int r = r0; r <= r1; ++r) {
    const double dy = r - spec.center_y;
    for (int c = c0; c <= c1; ++c) {
      const double dx = c - spec.center_x;
      // Inverse rotation into the shape's own axes.
      const double u = dx * t.cos + dy * t.sin;
      const double v = -dx * t.sin + dy * t.cos;
      if (inside(spec, u, v)) mask.set(r, c, true);
    }
  }
  return mask;
}

std::vector<SynthFrame> gen_sequence(const SequenceSpec& spec) {
  if (!(spec.boundary_noise_p >= 0.0 && spec.boundary_noise_p < 1.0) ||
      !(spec.salt_pepper_p >= 0.0 && spec.salt_pepper_p < 1.0)) {
    throw InvalidArgument("noise probabilities must lie in [0, 1)");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<SynthFrame> frames;
  frames.reserve(spec.schedule.size());
  for (const double angle : spec.schedule) {
    ShapeSpec shape = spec.shape;
    shape.angle_deg = angle;
    const BinaryMask clean = rasterize(shape);
    BinaryMask noisy = clean;
    if (spec.boundary_noise_p > 0.0) {
      for (int r = 0; r < clean.height(); ++r) {
        for (int c = 0; c < clean.width(); ++c) {
          const bool self = clean.at(r, c);
          const bool edge = clean.get(r - 1, c) != self ||
                            clean.get(r + 1, c) != self ||
                            clean.get(r, c - 1) != self ||
                            clean.get(r, c + 1) != self;
          if (!edge) continue;
          if (unit_draw(rng) < spec.boundary_noise_p) noisy.set(r, c, !self);
        }
      }
    }
    if (spec.salt_pepper_p > 0.0) {
      for (int r = 0; r < noisy.height(); ++r) {
        for (int c = 0; c < noisy.width(); ++c) {
          if (unit_draw(rng) < spec.salt_pepper_p) {
            noisy.set(r, c, !noisy.at(r, c));
          }
        }
      }
    }
    frames.push_back(SynthFrame{std::move(noisy), angle});
  }
  return frames;
}

std::vector<double> linear_schedule(double start, double stop, double step) {
  if (step == 0.0 || (stop - start) * step < 0.0) {
    throw InvalidArgument("schedule step must move from start toward stop");
  }
  std::vector<double> out;
  const double span = (stop - start) / step;
  const auto n = static_cast<long long>(std::floor(span + 1e-9));
  for (long long i = 0; i <= n; ++i) {
    out.push_back(start + static_cast<double>(i) * step);
  }
  return out;
}

Manifest to_manifest(const SequenceSpec& spec) {
  Manifest m;
  m.set("kind", std::string(to_string(spec.shape.kind)));
  m.set("length", format_double(spec.shape.length));
  m.set("width", format_double(spec.shape.width));
  m.set("center_x", format_double(spec.shape.center_x));
  m.set("center_y", format_double(spec.shape.center_y));
  m.set("canvas_width", std::to_string(spec.shape.canvas_width));
  m.set("canvas_height", std::to_string(spec.shape.canvas_height));
  m.set("frames", std::to_string(spec.schedule.size()));
  m.set("schedule", join_schedule(spec.schedule));
  m.set("boundary_noise_p", format_double(spec.boundary_noise_p));
  m.set("salt_pepper_p", format_double(spec.salt_pepper_p));
  m.set("seed", std::to_string(spec.seed));
  m.set("generator", std::string(kGeneratorName));
  return m;
}

SequenceSpec sequence_from_manifest(const Manifest& m) {
  SequenceSpec spec;
  spec.shape.kind = parse_shape_kind(m.require("kind"));
  spec.shape.length = parse_double(m.require("length"));
  spec.shape.width = parse_double(m.require("width"));
  spec.shape.center_x = parse_double(m.require("center_x"));
  spec.shape.center_y = parse_double(m.require("center_y"));
  spec.shape.canvas_width = static_cast<int>(parse_integer(m.require("canvas_width")));
  spec.shape.canvas_height =
      static_cast<int>(parse_integer(m.require("canvas_height")));
  spec.schedule = split_schedule(m.require("schedule"));
  if (!spec.schedule.empty()) spec.shape.angle_deg = spec.schedule.front();
  spec.boundary_noise_p = parse_double(m.require("boundary_noise_p"));
  spec.salt_pepper_p = parse_double(m.get("salt_pepper_p").value_or("0"));
  const std::string& seed = m.require("seed");
  const auto [ptr, ec] =
      std::from_chars(seed.data(), seed.data() + seed.size(), spec.seed);
  if (ec != std::errc() || ptr != seed.data() + seed.size()) {
    throw InvalidArgument("bad seed '" + seed + "'");
  }
  if (m.require("generator") != kGeneratorName) {
    throw InvalidArgument("manifest generator '" + m.require("generator") +
                          "' is not " + std::string(kGeneratorName));
  }
  return spec;
}

GrayFrame render_reference(int width, int height) {
  GrayFrame frame(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      // Gentle shading plus a fine periodic texture, all within [80, 140].
      const int shade = (40 * r) / std::max(1, height - 1);
      const int texture = (3 * r + 5 * c) % 17;
      frame.set(r, c, static_cast<std::uint8_t>(80 + shade + texture));
    }
  }
  return frame;
}

GrayFrame render_contact(const GrayFrame& reference, const BinaryMask& contact,
                         int delta) {
  if (reference.width() != contact.width() ||
      reference.height() != contact.height()) {
    throw InvalidArgument("contact mask and reference differ in size");
  }
  GrayFrame frame = reference;
  auto out = frame.data();
  const auto on = contact.data();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (on[i]) out[i] = static_cast<std::uint8_t>(std::clamp(out[i] + delta, 0, 255));
  }
  return frame;
}

std::string Trial::name() const { return label + "_" + std::to_string(index); }

std::vector<Trial> standard_campaign(double boundary_noise_p,
                                     int trials_per_shape) {
  struct Object {
    const char* label;
    ShapeKind kind;
    double length;
    double width;
  };
  // Aspect ratios 4 to 1.5. A capsule's aspect ratio is (length + width) /
  // width, which length >= width keeps at 2 or more.
  static constexpr std::array<Object, 9> kObjects = {{
      {"capsule_a4", ShapeKind::Capsule, 60.0, 20.0},
      {"capsule_a3", ShapeKind::Capsule, 50.0, 25.0},
      {"capsule_a2", ShapeKind::Capsule, 35.0, 35.0},
      {"rectangle_a4", ShapeKind::Rectangle, 100.0, 25.0},
      {"rectangle_a2.5", ShapeKind::Rectangle, 90.0, 36.0},
      {"rectangle_a1.5", ShapeKind::Rectangle, 75.0, 50.0},
      {"ellipse_a4", ShapeKind::Ellipse, 120.0, 30.0},
      {"ellipse_a2.5", ShapeKind::Ellipse, 100.0, 40.0},
      {"ellipse_a1.5", ShapeKind::Ellipse, 90.0, 60.0},
  }};
  static constexpr std::array<double, 5> kStartAngles = {0.0, 17.0, -33.0,
                                                         61.0, -71.0};
  std::vector<Trial> trials;
  for (std::size_t o = 0; o < kObjects.size(); ++o) {
    const Object& obj = kObjects[o];
    for (int t = 0; t < trials_per_shape; ++t) {
      const double start = kStartAngles[static_cast<std::size_t>(t) % kStartAngles.size()];
      Trial trial;
      trial.label = obj.label;
      trial.index = t;
      trial.sequence.shape = ShapeSpec::centered(obj.kind, obj.length, obj.width, start);
      trial.sequence.shape.center_x += 0.25 * t;
      trial.sequence.shape.center_y -= 0.15 * t;
      trial.sequence.schedule = linear_schedule(start, start + 40.0, 1.0);
      trial.sequence.boundary_noise_p = boundary_noise_p;
      trial.sequence.seed = 0x7AC7'0000ULL + 100 * o + static_cast<std::uint64_t>(t);
      trials.push_back(std::move(trial));
    }
  }
  return trials;
}

}  // namespace tactslip::synth
