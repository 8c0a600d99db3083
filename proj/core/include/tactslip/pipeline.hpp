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

#ifndef TACTSLIP_PIPELINE_HPP
#define TACTSLIP_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tactslip/config.hpp"
#include "tactslip/metrics.hpp"
#include "tactslip/synth.hpp"
#include "tactslip/tracker.hpp"

namespace tactslip {

// Per-frame slip estimation: (segment) -> largest component -> orientation ->
// tracker. The first pushed frame becomes the grasp reference.
class SlipPipeline {
 public:
  explicit SlipPipeline(PipelineConfig config);

  const PipelineConfig& config() const noexcept { return config_; }

  // Required before push_frame.
  void set_reference(GrayFrame reference);

  BinaryMask segment(const GrayFrame& frame) const;
  AngleEstimate estimate(const BinaryMask& mask) const;

  // Throws DegenerateContact if the first frame cannot be oriented.
  const SlipSample& push_mask(const BinaryMask& mask, std::uint64_t frame_index);
  const SlipSample& push_frame(const GrayFrame& frame, std::uint64_t frame_index);

  bool started() const noexcept { return tracker_.has_value(); }
  // Throws InvalidArgument before the first frame.
  const SlipTrack& track() const;

 private:
  PipelineConfig config_;
  std::optional<GrayFrame> reference_;
  std::optional<SlipTracker> tracker_;
};

struct TrackSummary {
  std::size_t frames = 0;
  std::size_t invalid_frames = 0;
  double final_slip_deg = 0.0;
};
TrackSummary summarize(const SlipTrack& track);

// Frames are numbered 0, 1, 2, ... in sequence order.
SlipTrack track_masks(std::span<const BinaryMask> masks,
                      const PipelineConfig& config);

std::vector<TruthSample> truth_from_schedule(std::span<const double> schedule);

struct TrialResult {
  std::string label;
  std::string name;
  SlipTrack track;
  SlipError error;
};

// Generates, tracks and scores one synthetic trial.
TrialResult run_trial(const synth::Trial& trial, const PipelineConfig& config);

struct LabelSummary {
  std::string label;
  std::size_t trials = 0;
  MeanStd per_frame;    // over every compared frame of the label's trials
  MeanStd final_angle;  // over the trials' final-frame errors
};

struct CampaignSummary {
  std::vector<LabelSummary> labels;  // in first-seen order
  MeanStd per_frame;
  MeanStd final_angle;
};
CampaignSummary summarize_campaign(std::span<const TrialResult> results);

// End-to-end latency on a synthetic frame pair: segment_diff, thin,
// skeleton_orientation and a tracker update, timed separately and together.
struct BenchReport {
  int width = 0;
  int height = 0;
  std::vector<StageTiming> stages;  // the last entry is "end_to_end"
  const StageTiming& end_to_end() const { return stages.back(); }
};
BenchReport run_pipeline_bench(int width, int height,
                               const TimingOptions& options = {},
                               const PipelineConfig& config = {});

}  // namespace tactslip

#endif  // TACTSLIP_PIPELINE_HPP
