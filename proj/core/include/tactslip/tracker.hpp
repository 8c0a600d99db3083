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

#ifndef TACTSLIP_TRACKER_HPP
#define TACTSLIP_TRACKER_HPP

#include <cstdint>
#include <deque>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tactslip/orientation.hpp"

namespace tactslip {

struct SlipSample {
  std::uint64_t frame_index = 0;
  double raw_angle_deg = 0.0;
  double slip_deg = 0.0;  // unwrapped, relative to the grasp reference
  bool valid = false;
  double elongation = 1.0;

  friend bool operator==(const SlipSample&, const SlipSample&) = default;
};

struct SlipTrack {
  double reference_angle_deg = 0.0;
  std::vector<SlipSample> samples;

  friend bool operator==(const SlipTrack&, const SlipTrack&) = default;
};

struct TrackerOptions {
  // Moving average over the last N valid unwrapped slips; 0 or 1 disables it.
  int smoothing_window = 0;
};

// Accumulates rotational slip relative to the first (reference) contact.
//
// Each valid estimate gives d = current - reference reduced to (-90, 90]; the
// representative d + k*180 nearest the previous valid slip is kept, so the
// signal stays continuous across the axis ambiguity. Invalid estimates
// append a sample that holds the previous slip and are flagged invalid.
class SlipTracker {
 public:
  // Throws DegenerateContact if the reference is not valid.
  explicit SlipTracker(const AngleEstimate& reference,
                       std::uint64_t frame_index = 0,
                       TrackerOptions options = {});

  // Throws InvalidArgument unless frame_index exceeds the last sample's.
  const SlipSample& update(const AngleEstimate& estimate,
                           std::uint64_t frame_index);

  const SlipTrack& track() const noexcept { return track_; }
  double current_slip_deg() const noexcept {
    return track_.samples.back().slip_deg;
  }

 private:
  double smoothed(double unwrapped);

  SlipTrack track_;
  TrackerOptions options_;
  double last_unwrapped_ = 0.0;
  std::deque<double> window_;
};

// Shortest signed step from `from` to the axis representative of `to`,
// in (-90, 90].
double axis_step_deg(double from, double to) noexcept;

// CSV with header "frame,raw_angle_deg,slip_deg,elongation,valid"; angles and
// elongation with three decimals, valid as 0/1.
std::string track_csv_header();
std::string track_csv_row(const SlipSample& sample);
void write_track_csv(std::ostream& out, const SlipTrack& track);
void write_track_csv(const std::filesystem::path& path, const SlipTrack& track);
// Reference angle is not stored in the CSV; it reads back as the first valid
// raw angle.
SlipTrack read_track_csv(std::istream& in);
SlipTrack read_track_csv(const std::filesystem::path& path);

// Fixed three-decimal formatting without a negative zero.
std::string format_fixed3(double value);

}  // namespace tactslip

#endif  // TACTSLIP_TRACKER_HPP
