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

#include "tactslip/pipeline.hpp"

#include <algorithm>
#include <map>

#include "tactslip/error.hpp"
#include "tactslip/segmenter.hpp"
#include "tactslip/thinning.hpp"

namespace tactslip {

SlipPipeline::SlipPipeline(PipelineConfig config) : config_(std::move(config)) {
  config_.validate();
}

void SlipPipeline::set_reference(GrayFrame reference) {
  reference_ = std::move(reference);
}

BinaryMask SlipPipeline::segment(const GrayFrame& frame) const {
  if (!reference_) {
    throw InvalidArgument("raw frames need a no-contact reference frame");
  }
  return segment_diff(frame, *reference_, config_.segment);
}

AngleEstimate SlipPipeline::estimate(const BinaryMask& mask) const {
  return estimate_orientation(largest_component(mask, Connectivity::Eight),
                              config_.estimator, config_.orientation);
}

const SlipSample& SlipPipeline::push_mask(const BinaryMask& mask,
                                          std::uint64_t frame_index) {
  const AngleEstimate e = estimate(mask);
  if (!tracker_) {
    tracker_.emplace(e, frame_index,
                     TrackerOptions{config_.smoothing_window});
    return tracker_->track().samples.back();
  }
  return tracker_->update(e, frame_index);
}

const SlipSample& SlipPipeline::push_frame(const GrayFrame& frame,
                                           std::uint64_t frame_index) {
  return push_mask(segment(frame), frame_index);
}

const SlipTrack& SlipPipeline::track() const {
  if (!tracker_) throw InvalidArgument("no frame has been processed yet");
  return tracker_->track();
}

TrackSummary summarize(const SlipTrack& track) {
  TrackSummary s;
  s.frames = track.samples.size();
  for (const auto& sample : track.samples) {
    if (!sample.valid) ++s.invalid_frames;
  }
  if (!track.samples.empty()) s.final_slip_deg = track.samples.back().slip_deg;
  return s;
}

SlipTrack track_masks(std::span<const BinaryMask> masks,
                      const PipelineConfig& config) {
  if (masks.empty()) throw InvalidArgument("no frames to track");
  SlipPipeline pipeline(config);
  for (std::size_t i = 0; i < masks.size(); ++i) pipeline.push_mask(masks[i], i);
  return pipeline.track();
}

std::vector<TruthSample> truth_from_schedule(std::span<const double> schedule) {
  std::vector<TruthSample> truth;
  truth.reserve(schedule.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    truth.push_back({i, schedule[i] - schedule.front()});
  }
  return truth;
}

TrialResult run_trial(const synth::Trial& trial, const PipelineConfig& config) {
  const auto frames = synth::gen_sequence(trial.sequence);
  std::vector<BinaryMask> masks;
  masks.reserve(frames.size());
  for (const auto& f : frames) masks.push_back(f.mask);
  TrialResult result;
  result.label = trial.label;
  result.name = trial.name();
  result.track = track_masks(masks, config);
  const auto truth = truth_from_schedule(trial.sequence.schedule);
  result.error = rotational_error(result.track, truth);
  return result;
}

CampaignSummary summarize_campaign(std::span<const TrialResult> results) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
  std::vector<double> all_frames;
  std::vector<double> all_finals;
  for (const auto& r : results) {
    if (!groups.contains(r.label)) order.push_back(r.label);
    auto& [frames, finals] = groups[r.label];
    frames.insert(frames.end(), r.error.per_frame_abs_deg.begin(),
                  r.error.per_frame_abs_deg.end());
    finals.push_back(r.error.final_abs_deg);
    all_frames.insert(all_frames.end(), r.error.per_frame_abs_deg.begin(),
                      r.error.per_frame_abs_deg.end());
    all_finals.push_back(r.error.final_abs_deg);
  }
  CampaignSummary summary;
  for (const auto& label : order) {
    const auto& [frames, finals] = groups[label];
    summary.labels.push_back(
        {label, finals.size(), mean_std(frames), mean_std(finals)});
  }
  summary.per_frame = mean_std(all_frames);
  summary.final_angle = mean_std(all_finals);
  return summary;
}

BenchReport run_pipeline_bench(int width, int height,
                               const TimingOptions& options,
                               const PipelineConfig& config) {
  // A capsule filling roughly a third of the sensor width.
  const double length = 0.3 * std::min(width, height);
  const double thickness = 0.1 * std::min(width, height);
  const auto shape = synth::ShapeSpec::centered(
      synth::ShapeKind::Capsule, length, thickness, 30.0, width, height);
  const GrayFrame reference = synth::render_reference(width, height);
  const GrayFrame contact =
      synth::render_contact(reference, synth::rasterize(shape), 60);

  const BinaryMask region = segment_diff(contact, reference, config.segment);
  const Skeleton skeleton = thin(region);
  const AngleEstimate estimate = skeleton_orientation(skeleton, config.orientation);
  if (!estimate.valid) throw InternalError("benchmark frame is not orientable");

  BenchReport report;
  report.width = width;
  report.height = height;
  SlipTracker stage_tracker(estimate);
  std::uint64_t stage_frame = 0;
  report.stages.push_back(time_stage(
      "segment_diff",
      [&] { (void)segment_diff(contact, reference, config.segment); }, options));
  report.stages.push_back(
      time_stage("thin", [&] { (void)thin(region); }, options));
  report.stages.push_back(time_stage(
      "skeleton_orientation",
      [&] { (void)skeleton_orientation(skeleton, config.orientation); },
      options));
  report.stages.push_back(time_stage(
      "tracker_update",
      [&] { stage_tracker.update(estimate, ++stage_frame); }, options));

  PipelineConfig skeleton_config = config;
  skeleton_config.estimator = Estimator::Skeleton;
  SlipPipeline pipeline(skeleton_config);
  pipeline.set_reference(reference);
  std::uint64_t frame = 0;
  pipeline.push_frame(contact, frame);
  report.stages.push_back(time_stage(
      "end_to_end", [&] { pipeline.push_frame(contact, ++frame); }, options));
  return report;
}

}  // namespace tactslip
