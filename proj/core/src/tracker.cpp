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

#include "tactslip/tracker.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tactslip/error.hpp"

namespace tactslip {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoError(std::string("bad ") + what + " value '" + s + "'");
  }
  return v;
}

std::uint64_t parse_index(const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoError("bad frame index '" + s + "'");
  }
  return v;
}

}  // namespace

double axis_step_deg(double from, double to) noexcept {
  return reduce_axis_deg(to - from);
}

SlipTracker::SlipTracker(const AngleEstimate& reference,
                         std::uint64_t frame_index, TrackerOptions options)
    : options_(options) {
  if (!reference.valid) {
    throw DegenerateContact(
        "reference contact is too round or too small to orient");
  }
  track_.reference_angle_deg = reference.angle_deg;
  track_.samples.push_back(
      SlipSample{frame_index, reference.angle_deg, 0.0, true,
                 reference.elongation});
  window_.push_back(0.0);
}

const SlipSample& SlipTracker::update(const AngleEstimate& estimate,
                                      std::uint64_t frame_index) {
  const std::uint64_t last = track_.samples.back().frame_index;
  if (frame_index <= last) {
    throw InvalidArgument("frame index " + std::to_string(frame_index) +
                          " does not follow " + std::to_string(last));
  }
  SlipSample sample;
  sample.frame_index = frame_index;
  sample.raw_angle_deg = estimate.angle_deg;
  sample.elongation = estimate.elongation;
  sample.valid = estimate.valid;
  if (!estimate.valid) {
    sample.slip_deg = track_.samples.back().slip_deg;
  } else {
    // Work from the representative d in (-90, 90] and add whole half turns so
    // the result is exact (e.g. 0 when current == reference).
    const double d =
        reduce_axis_deg(estimate.angle_deg - track_.reference_angle_deg);
    double turns = std::round((last_unwrapped_ - d) / 180.0);
    double candidate = d + 180.0 * turns;
    if (candidate - last_unwrapped_ <= -90.0) {
      candidate += 180.0;
    } else if (candidate - last_unwrapped_ > 90.0) {
      candidate -= 180.0;
    }
    last_unwrapped_ = candidate;
    sample.slip_deg = smoothed(candidate);
  }
  track_.samples.push_back(sample);
  return track_.samples.back();
}

double SlipTracker::smoothed(double unwrapped) {
  if (options_.smoothing_window <= 1) return unwrapped;
  window_.push_back(unwrapped);
  while (window_.size() > static_cast<std::size_t>(options_.smoothing_window)) {
    window_.pop_front();
  }
  return std::accumulate(window_.begin(), window_.end(), 0.0) /
         static_cast<double>(window_.size());
}

std::string format_fixed3(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string track_csv_header() {
  return "frame,raw_angle_deg,slip_deg,elongation,valid";
}

std::string track_csv_row(const SlipSample& sample) {
  return std::to_string(sample.frame_index) + "," +
         format_fixed3(sample.raw_angle_deg) + "," +
         format_fixed3(sample.slip_deg) + "," +
         format_fixed3(sample.elongation) + "," + (sample.valid ? "1" : "0");
}

void write_track_csv(std::ostream& out, const SlipTrack& track) {
  out << track_csv_header() << '\n';
  for (const SlipSample& s : track.samples) out << track_csv_row(s) << '\n';
}

void write_track_csv(const std::filesystem::path& path,
                     const SlipTrack& track) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_track_csv(out, track);
  if (!out) throw IoError("write failed for " + path.string());
}

SlipTrack read_track_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != track_csv_header()) {
    throw IoError("track CSV must start with '" + track_csv_header() + "'");
  }
  SlipTrack track;
  bool have_reference = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 5) throw IoError("track CSV row needs 5 fields: " + line);
    SlipSample s;
    s.frame_index = parse_index(f[0]);
    s.raw_angle_deg = parse_double(f[1], "raw_angle_deg");
    s.slip_deg = parse_double(f[2], "slip_deg");
    s.elongation = parse_double(f[3], "elongation");
    if (f[4] != "0" && f[4] != "1") throw IoError("bad valid flag: " + f[4]);
    s.valid = f[4] == "1";
    if (!track.samples.empty() &&
        s.frame_index <= track.samples.back().frame_index) {
      throw IoError("track CSV frame indices must increase");
    }
    if (s.valid && !have_reference) {
      track.reference_angle_deg = s.raw_angle_deg;
      have_reference = true;
    }
    track.samples.push_back(s);
  }
  return track;
}

SlipTrack read_track_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return read_track_csv(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

}  // namespace tactslip
