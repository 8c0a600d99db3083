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

// Acceptance suite. Prints one PASS/FAIL line per criterion (with indented
// detail lines) and exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tactslip/error.hpp"
#include "tactslip/metrics.hpp"
#include "tactslip/orientation.hpp"
#include "tactslip/pgm.hpp"
#include "tactslip/pipeline.hpp"
#include "tactslip/synth.hpp"
#include "tactslip/thinning.hpp"
#include "tactslip/tracker.hpp"

namespace tactslip {
namespace {

// Tolerances.
constexpr double kCampaignNoise = 0.03;
constexpr double kNoisyMaxMeanDeg = 2.0;
constexpr double kNoisyMaxFinalDeg = 2.0;
constexpr double kCleanMaxMeanDeg = 0.5;
constexpr double kCampaignMaxSeconds = 60.0;
constexpr int kMetricPairs = 1000;
constexpr double kIdentityTol = 1e-12;
constexpr int kThinShapes = 200;
constexpr double kTranslationTolDeg = 1e-9;
constexpr double kEquivarianceTolDeg = 1.0;
constexpr double kAgreementTolDeg = 1.5;
constexpr double kMaxStepDeg = 4.0;
constexpr double kLatencyBudgetMs = 5.0;

int g_failures = 0;

void verdict(int id, const std::string& title, bool pass) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, title.c_str());
  if (!pass) ++g_failures;
}

template <typename... Args>
void detail(const char* fmt, Args... args) {
  std::printf("    ");
  std::printf(fmt, args...);
  std::printf("\n");
}

double axis_gap(double a, double b) { return std::abs(reduce_axis_deg(a - b)); }

constexpr Estimator kEstimators[] = {Estimator::Skeleton, Estimator::Pca,
                                     Estimator::Ellipse};

// ------------------------------------------------------------ criterion 1

struct CampaignRun {
  CampaignSummary summary;
  double seconds = 0.0;
  int degenerate = 0;
};

CampaignRun run_campaign(double noise, Estimator estimator) {
  PipelineConfig config;
  config.estimator = estimator;
  CampaignRun run;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<TrialResult> results;
  for (const auto& trial : synth::standard_campaign(noise)) {
    try {
      results.push_back(run_trial(trial, config));
    } catch (const DegenerateContact&) {
      ++run.degenerate;
    }
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  run.summary = summarize_campaign(results);
  return run;
}

void criterion_campaign() {
  const CampaignRun noisy = run_campaign(kCampaignNoise, Estimator::Skeleton);
  const CampaignRun clean = run_campaign(0.0, Estimator::Skeleton);
  bool pass = noisy.degenerate == 0 && clean.degenerate == 0 &&
              noisy.seconds <= kCampaignMaxSeconds;
  std::printf("    %-16s %22s %22s %16s\n", "shape", "p=0.03 per-frame", "p=0.03 final",
              "p=0 per-frame");
  for (std::size_t i = 0; i < noisy.summary.labels.size(); ++i) {
    const LabelSummary& n = noisy.summary.labels[i];
    const LabelSummary& c = clean.summary.labels[i];
    const bool ok = n.per_frame.mean <= kNoisyMaxMeanDeg &&
                    n.final_angle.mean <= kNoisyMaxFinalDeg &&
                    c.per_frame.mean <= kCleanMaxMeanDeg;
    pass = pass && ok;
    std::printf("    %-16s %9.3f +- %-9.3f %9.3f +- %-9.3f %7.3f +- %-6.3f %s\n",
                n.label.c_str(), n.per_frame.mean, n.per_frame.std, n.final_angle.mean,
                n.final_angle.std, c.per_frame.mean, c.per_frame.std, ok ? "ok" : "over");
  }
  detail("overall p=0.03: per-frame %.3f +- %.3f deg, final %.3f +- %.3f deg",
         noisy.summary.per_frame.mean, noisy.summary.per_frame.std,
         noisy.summary.final_angle.mean, noisy.summary.final_angle.std);
  detail("overall p=0: per-frame %.3f +- %.3f deg", clean.summary.per_frame.mean,
         clean.summary.per_frame.std);
  detail("degenerate trials: %d (p=0.03), %d (p=0)", noisy.degenerate, clean.degenerate);
  detail("45-trial runtime %.2f s (limit %.0f s)", noisy.seconds, kCampaignMaxSeconds);
  for (Estimator e : {Estimator::Pca, Estimator::Ellipse}) {
    const CampaignRun other = run_campaign(kCampaignNoise, e);
    double worst_mean = 0.0, worst_final = 0.0;
    for (const auto& l : other.summary.labels) {
      worst_mean = std::max(worst_mean, l.per_frame.mean);
      worst_final = std::max(worst_final, l.final_angle.mean);
    }
    detail("info, %s estimator p=0.03: overall %.3f deg, worst shape per-frame %.3f, "
           "final %.3f",
           std::string(to_string(e)).c_str(), other.summary.per_frame.mean, worst_mean,
           worst_final);
  }
  verdict(1, "synthetic slip campaign, skeleton estimator", pass);
}

// ------------------------------------------------------------ criterion 2

void criterion_metrics() {
  bool trivial = true;
  {
    const std::vector<Pixel> a = {{0, 0}, {0, 1}};
    const std::vector<Pixel> b = {{0, 1}, {0, 2}};
    const std::vector<Pixel> c = {{2, 2}};
    const auto ma = BinaryMask::from_pixels(3, 3, a);
    const auto mb = BinaryMask::from_pixels(3, 3, b);
    const auto mc = BinaryMask::from_pixels(3, 3, c);
    const SegScore same = dice_iou(ma, ma);
    const SegScore disjoint = dice_iou(ma, mc);
    const SegScore hand = dice_iou(ma, mb);
    trivial = same.dice == 1.0 && same.iou == 1.0 && disjoint.dice == 0.0 &&
              disjoint.iou == 0.0 && hand.dice == 0.5 && hand.iou == 1.0 / 3.0;
  }
  std::mt19937_64 rng(0xD1CE);
  int mismatches = 0, identity_failures = 0;
  double worst_identity = 0.0;
  for (int i = 0; i < kMetricPairs; ++i) {
    auto spec = oracle::random_shape(rng, 64, 64, 3.0, 24.0);
    synth::SequenceSpec seq{spec, {spec.angle_deg}, 0.2, 0.0, rng()};
    const BinaryMask truth = synth::rasterize(spec);
    BinaryMask pred = synth::gen_sequence(seq)[0].mask;
    if (i % 10 == 0) pred = BinaryMask(64, 64);  // include empty predictions
    const SegScore got = dice_iou(pred, truth);
    const oracle::Overlap want = oracle::dice_iou(pred, truth);
    if (got.dice != want.dice || got.iou != want.iou) ++mismatches;
    const double gap = std::abs(got.dice - 2.0 * got.iou / (1.0 + got.iou));
    worst_identity = std::max(worst_identity, gap);
    if (gap > kIdentityTol) ++identity_failures;
  }
  detail("analytic cases exact: %s", trivial ? "yes" : "no");
  detail("%d random pairs: %d oracle mismatches, identity worst gap %.1e (tol %.0e)",
         kMetricPairs, mismatches, worst_identity, kIdentityTol);
  verdict(2, "metric exactness", trivial && mismatches == 0 && identity_failures == 0);
}

// ------------------------------------------------------------ criterion 3

void criterion_thinning() {
  std::mt19937_64 rng(0x7417);
  int subset = 0, idempotence = 0, components = 0, cap = 0;
  for (int i = 0; i < kThinShapes; ++i) {
    const BinaryMask m = synth::rasterize(oracle::random_shape(rng, 128, 128));
    try {
      const BinaryMask s = thin(m).to_mask();
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (s.data()[k] && !m.data()[k]) {
          ++subset;
          break;
        }
      }
      if (thin(s).to_mask() != s) ++idempotence;
      if (count_components(s, Connectivity::Eight) !=
          count_components(m, Connectivity::Eight)) {
        ++components;
      }
    } catch (const InternalError&) {
      ++cap;
    }
  }
  detail("%d shapes: subset %d, idempotence %d, component count %d, cap reached %d",
         kThinShapes, subset, idempotence, components, cap);
  verdict(3, "thinning properties", subset + idempotence + components + cap == 0);
}

// ------------------------------------------------------------ criterion 4

struct CapsuleSize {
  double length, width;
};
// Aspect ratios (length + width) / width from 2 to 4.
constexpr CapsuleSize kCapsules[] = {{60, 20}, {50, 25}, {35, 35}, {48, 16}, {72, 24}};

BinaryMask capsule(const CapsuleSize& c, double angle) {
  return synth::rasterize(synth::ShapeSpec::centered(synth::ShapeKind::Capsule, c.length,
                                                     c.width, angle, 200, 200));
}

void criterion_orientation() {
  bool pass = true;

  // Translation invariance.
  std::mt19937_64 rng(0x0A1E);
  std::uniform_real_distribution<double> angle(-90.0, 90.0), shift(-30.0, 30.0);
  double worst_translation = 0.0;
  int translation_validity = 0;
  for (int i = 0; i < 40; ++i) {
    const CapsuleSize& c = kCapsules[i % 5];
    auto a = synth::ShapeSpec::centered(synth::ShapeKind::Capsule, c.length, c.width,
                                        angle(rng), 200, 200);
    auto b = a;
    b.center_x += std::round(shift(rng));
    b.center_y += std::round(shift(rng));
    const BinaryMask ma = synth::rasterize(a), mb = synth::rasterize(b);
    for (Estimator e : kEstimators) {
      const auto ea = estimate_orientation(ma, e), eb = estimate_orientation(mb, e);
      if (ea.valid != eb.valid) ++translation_validity;
      worst_translation = std::max(worst_translation, axis_gap(ea.angle_deg, eb.angle_deg));
    }
  }
  const bool translation_ok =
      worst_translation <= kTranslationTolDeg && translation_validity == 0;
  detail("translation: worst %.2e deg over 40 capsules x 3 estimators %s",
         worst_translation, translation_ok ? "ok" : "over");
  pass = pass && translation_ok;

  // Rotation equivariance over delta in [-60, 60].
  for (Estimator e : kEstimators) {
    double worst = 0.0;
    int invalid = 0;
    std::string where;
    for (const CapsuleSize& c : kCapsules) {
      for (double base : {0.0, 25.0, -50.0}) {
        const auto e0 = estimate_orientation(capsule(c, base), e);
        for (int delta = -60; delta <= 60; delta += 5) {
          const auto e1 = estimate_orientation(capsule(c, base + delta), e);
          if (!e0.valid || !e1.valid) {
            ++invalid;
            continue;
          }
          const double err = axis_gap(e1.angle_deg - e0.angle_deg, delta);
          if (err > worst) {
            worst = err;
            char buf[96];
            std::snprintf(buf, sizeof buf, "capsule %gx%g base %g delta %d", c.length,
                          c.width, base, delta);
            where = buf;
          }
        }
      }
    }
    const bool ok = worst <= kEquivarianceTolDeg && invalid == 0;
    pass = pass && ok;
    detail("equivariance %-8s worst %.3f deg (%s), invalid %d %s",
           std::string(to_string(e)).c_str(), worst, where.c_str(), invalid,
           ok ? "ok" : "over");
  }

  // Pairwise agreement on clean capsules.
  double worst_pair = 0.0;
  std::string where;
  for (const CapsuleSize& c : kCapsules) {
    for (double a = -85.0; a <= 90.0; a += 5.0) {
      const BinaryMask m = capsule(c, a);
      AngleEstimate est[3];
      for (int k = 0; k < 3; ++k) est[k] = estimate_orientation(m, kEstimators[k]);
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          const double gap = axis_gap(est[i].angle_deg, est[j].angle_deg);
          if (gap > worst_pair) {
            worst_pair = gap;
            char buf[96];
            std::snprintf(buf, sizeof buf, "capsule %gx%g at %g, %s vs %s", c.length,
                          c.width, a, std::string(to_string(kEstimators[i])).c_str(),
                          std::string(to_string(kEstimators[j])).c_str());
            where = buf;
          }
        }
      }
    }
  }
  const bool agree_ok = worst_pair <= kAgreementTolDeg;
  pass = pass && agree_ok;
  detail("agreement: worst pair gap %.3f deg (%s) %s", worst_pair, where.c_str(),
         agree_ok ? "ok" : "over");

  // Round contacts.
  int round_cases = 0, round_valid = 0;
  for (double side : {12.0, 20.0, 31.0, 45.0}) {
    for (double a = -90.0; a < 90.0; a += 7.5) {
      for (auto kind : {synth::ShapeKind::Disc, synth::ShapeKind::Rectangle}) {
        const BinaryMask m = synth::rasterize(
            synth::ShapeSpec::centered(kind, side, side, a, 100, 100));
        for (Estimator e : kEstimators) {
          ++round_cases;
          if (estimate_orientation(m, e).valid) ++round_valid;
        }
      }
    }
  }
  pass = pass && round_valid == 0;
  detail("discs and squares: %d of %d estimates flagged valid", round_valid, round_cases);
  verdict(4, "orientation properties", pass);
}

// ------------------------------------------------------------ criterion 5

std::vector<double> track_angles(double reference, const std::vector<double>& angles) {
  SlipTracker t(AngleEstimate{reduce_axis_deg(reference), 3.0, true});
  std::vector<double> out;
  std::uint64_t frame = 1;
  for (double a : angles) {
    out.push_back(t.update(AngleEstimate{reduce_axis_deg(a), 3.0, true}, frame++).slip_deg);
  }
  return out;
}

void criterion_tracker() {
  bool hand = true;
  hand = hand && track_angles(10, {12}) == std::vector<double>{2};
  hand = hand && track_angles(85, {-88}) == std::vector<double>{7};
  hand = hand && track_angles(0, {30, 60, 89, -89}) == std::vector<double>{30, 60, 89, 91};
  {
    SlipTracker t(AngleEstimate{0.0, 3.0, true});
    t.update(AngleEstimate{15.0, 3.0, true}, 1);
    const SlipSample s = t.update(AngleEstimate{}, 2);
    hand = hand && s.slip_deg == 15.0 && !s.valid;
  }
  detail("hand-built sequences: %s", hand ? "ok" : "mismatch");

  std::vector<double> schedule = synth::linear_schedule(0, 120, 2);
  std::vector<double> raw(schedule.begin() + 1, schedule.end());
  double worst_step = 0.0, prev = 0.0, worst_err = 0.0;
  for (double s : track_angles(0, raw)) {
    worst_step = std::max(worst_step, std::abs(s - prev));
    prev = s;
  }
  const auto slips = track_angles(0, raw);
  for (std::size_t i = 0; i < slips.size(); ++i) {
    worst_err = std::max(worst_err, std::abs(slips[i] - raw[i]));
  }
  detail("0 to 120 deg angle schedule: largest step %.3f deg, final %.3f deg",
         worst_step, slips.back());

  // Same schedule through the full mask pipeline. Reported only: its steps
  // mix estimator error into what is a check of the unwrapping rule.
  synth::SequenceSpec seq;
  seq.shape = synth::ShapeSpec::centered(synth::ShapeKind::Capsule, 60, 20, 0);
  seq.schedule = schedule;
  std::vector<BinaryMask> masks;
  for (auto& f : synth::gen_sequence(seq)) masks.push_back(std::move(f.mask));
  const SlipTrack track = track_masks(masks, PipelineConfig{});
  double pipe_step = 0.0;
  for (std::size_t i = 1; i < track.samples.size(); ++i) {
    pipe_step = std::max(pipe_step,
                         std::abs(track.samples[i].slip_deg - track.samples[i - 1].slip_deg));
  }
  detail("info, 0 to 120 deg capsule masks, skeleton estimator: largest step %.3f deg, "
         "final %.3f deg",
         pipe_step, track.samples.back().slip_deg);
  verdict(5, "tracker unwrapping",
          hand && worst_step <= kMaxStepDeg && worst_err < 1e-9);
}

// ------------------------------------------------------------ criterion 6

void criterion_latency() {
  const BenchReport r = run_pipeline_bench(320, 240, TimingOptions{100, 10});
  for (const StageTiming& s : r.stages) {
    detail("%-22s median %.3f ms", s.stage.c_str(), 1e3 * s.median_s);
  }
  const double median_ms = 1e3 * r.end_to_end().median_s;
  detail("end-to-end median %.3f ms (budget %.1f ms)", median_ms, kLatencyBudgetMs);
  verdict(6, "latency budget", median_ms <= kLatencyBudgetMs);
}

// ------------------------------------------------------------ criterion 7

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes masks and the track CSV for one noisy trial, returns all bytes.
std::vector<std::string> produce(const std::filesystem::path& dir) {
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto trial = synth::standard_campaign(kCampaignNoise, 2)[1];
  std::vector<BinaryMask> masks;
  for (auto& f : synth::gen_sequence(trial.sequence)) masks.push_back(std::move(f.mask));
  std::vector<std::string> bytes;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const auto p = dir / ("m" + std::to_string(i) + ".pgm");
    pgm::write_mask(p, masks[i]);
    bytes.push_back(slurp(p));
  }
  write_track_csv(dir / "track.csv", track_masks(masks, PipelineConfig{}));
  write_truth_csv(dir / "truth.csv", truth_from_schedule(trial.sequence.schedule));
  bytes.push_back(slurp(dir / "track.csv"));
  bytes.push_back(slurp(dir / "truth.csv"));
  return bytes;
}

void criterion_determinism() {
  const auto root = std::filesystem::temp_directory_path() / "tactslip_acceptance";
  const auto a = produce(root / "run_a");
  const auto b = produce(root / "run_b");
  std::filesystem::remove_all(root);
  detail("%zu files compared byte for byte", a.size());
  verdict(7, "determinism", a == b && !a.empty());
}

}  // namespace
}  // namespace tactslip

int main() {
  using namespace tactslip;
  criterion_campaign();
  criterion_metrics();
  criterion_thinning();
  criterion_orientation();
  criterion_tracker();
  criterion_latency();
  criterion_determinism();
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
