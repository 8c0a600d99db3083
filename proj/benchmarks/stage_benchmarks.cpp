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

// Per-stage microbenchmarks on synthetic 320x240 contact frames.

#include <benchmark/benchmark.h>

#include "tactslip/metrics.hpp"
#include "tactslip/orientation.hpp"
#include "tactslip/pipeline.hpp"
#include "tactslip/segmenter.hpp"
#include "tactslip/synth.hpp"
#include "tactslip/thinning.hpp"
#include "tactslip/tracker.hpp"

namespace tactslip {
namespace {

constexpr int kWidth = 320;
constexpr int kHeight = 240;

struct Scene {
  GrayFrame reference = synth::render_reference(kWidth, kHeight);
  BinaryMask contact_mask;
  GrayFrame contact;

  explicit Scene(double length = 72.0, double width = 24.0)
      : contact_mask(synth::rasterize(synth::ShapeSpec::centered(
            synth::ShapeKind::Capsule, length, width, 30.0, kWidth, kHeight))),
        contact(synth::render_contact(reference, contact_mask, 60)) {}
};

const Scene& scene() {
  static const Scene s;
  return s;
}

void BM_SegmentDiff(benchmark::State& state) {
  const Scene& s = scene();
  for (auto _ : state) {
    benchmark::DoNotOptimize(segment_diff(s.contact, s.reference));
  }
}
BENCHMARK(BM_SegmentDiff);

void BM_Thin(benchmark::State& state) {
  const double width = static_cast<double>(state.range(0));
  const BinaryMask m = synth::rasterize(synth::ShapeSpec::centered(
      synth::ShapeKind::Capsule, 3.0 * width, width, 30.0, kWidth, kHeight));
  for (auto _ : state) benchmark::DoNotOptimize(thin(m));
  state.counters["pixels"] = static_cast<double>(m.count());
}
BENCHMARK(BM_Thin)->Arg(12)->Arg(24)->Arg(48)->Arg(72);

void BM_ThinEmpty(benchmark::State& state) {
  const BinaryMask m(kWidth, kHeight);
  for (auto _ : state) benchmark::DoNotOptimize(thin(m));
}
BENCHMARK(BM_ThinEmpty);

void BM_Estimator(benchmark::State& state) {
  const auto estimator = static_cast<Estimator>(state.range(0));
  const BinaryMask& m = scene().contact_mask;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_orientation(m, estimator));
  state.SetLabel(std::string(to_string(estimator)));
}
BENCHMARK(BM_Estimator)
    ->Arg(static_cast<int>(Estimator::Skeleton))
    ->Arg(static_cast<int>(Estimator::Pca))
    ->Arg(static_cast<int>(Estimator::Ellipse));

void BM_SkeletonLineFit(benchmark::State& state) {
  const Skeleton sk = thin(scene().contact_mask);
  for (auto _ : state) benchmark::DoNotOptimize(skeleton_orientation(sk));
}
BENCHMARK(BM_SkeletonLineFit);

void BM_TrackerUpdate(benchmark::State& state) {
  SlipTracker tracker(AngleEstimate{30.0, 3.0, true});
  std::uint64_t frame = 0;
  double angle = 30.0;
  for (auto _ : state) {
    angle = reduce_axis_deg(angle + 0.7);
    benchmark::DoNotOptimize(tracker.update(AngleEstimate{angle, 3.0, true}, ++frame));
  }
}
BENCHMARK(BM_TrackerUpdate);

void BM_DiceIou(benchmark::State& state) {
  const BinaryMask& a = scene().contact_mask;
  const BinaryMask b = morph(a, MorphOp::Dilate, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dice_iou(a, b));
}
BENCHMARK(BM_DiceIou);

void BM_EndToEnd(benchmark::State& state) {
  const Scene& s = scene();
  SlipPipeline pipeline{PipelineConfig{}};
  pipeline.set_reference(s.reference);
  std::uint64_t frame = 0;
  pipeline.push_frame(s.contact, frame);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pipeline.push_frame(s.contact, ++frame));
  }
}
BENCHMARK(BM_EndToEnd)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace tactslip

BENCHMARK_MAIN();
