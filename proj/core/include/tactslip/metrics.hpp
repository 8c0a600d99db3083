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

#ifndef TACTSLIP_METRICS_HPP
#define TACTSLIP_METRICS_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tactslip/mask.hpp"
#include "tactslip/tracker.hpp"

namespace tactslip {

struct SegScore {
  double dice = 0.0;
  double iou = 0.0;
};

// Dice 2|A&B|/(|A|+|B|) and IoU |A&B|/|A|B|; two empty masks score 1.
// Throws InvalidArgument on a dimension mismatch.
SegScore dice_iou(const BinaryMask& pred, const BinaryMask& truth);

// Mean and population standard deviation.
struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
MeanStd mean_std(std::span<const double> values);

// Ground-truth slip, already relative to the first frame.
struct TruthSample {
  std::uint64_t frame_index = 0;
  double angle_deg = 0.0;
};

// "frame,angle_deg" CSV.
std::vector<TruthSample> read_truth_csv(std::istream& in);
std::vector<TruthSample> read_truth_csv(const std::filesystem::path& path);
void write_truth_csv(std::ostream& out, std::span<const TruthSample> truth);
void write_truth_csv(const std::filesystem::path& path,
                     std::span<const TruthSample> truth);

struct SlipError {
  double mean_abs_deg = 0.0;
  double std_deg = 0.0;
  std::vector<double> per_frame_abs_deg;
  // |pred - truth| at the last compared frame of the trial.
  double final_abs_deg = 0.0;
};

// Compares unwrapped slip at every truth frame where the prediction is valid.
// Throws InvalidArgument if a truth frame is missing from the track or if no
// frame is comparable.
SlipError rotational_error(const SlipTrack& pred,
                           std::span<const TruthSample> truth);

struct TimingOptions {
  int repetitions = 100;
  int warmup = 10;
};

struct StageTiming {
  std::string stage;
  std::vector<double> seconds;  // one entry per timed repetition
  double mean_s = 0.0;
  double std_s = 0.0;
  double median_s = 0.0;
};

// Wall-clock timing of one stage: `warmup` discarded calls, then
// `repetitions` timed calls.
StageTiming time_stage(std::string stage, const std::function<void()>& fn,
                       const TimingOptions& options = {});

double median(std::vector<double> values);

}  // namespace tactslip

#endif  // TACTSLIP_METRICS_HPP
