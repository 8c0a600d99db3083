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

#include "tactslip/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "tactslip/error.hpp"

namespace tactslip {

SegScore dice_iou(const BinaryMask& pred, const BinaryMask& truth) {
  if (pred.width() != truth.width() || pred.height() != truth.height()) {
    throw InvalidArgument("dice_iou needs masks of identical dimensions");
  }
  std::size_t a = 0, b = 0, both = 0;
  const auto p = pred.data();
  const auto t = truth.data();
  for (std::size_t i = 0; i < p.size(); ++i) {
    a += p[i];
    b += t[i];
    both += p[i] & t[i];
  }
  if (a + b == 0) return {1.0, 1.0};
  const std::size_t either = a + b - both;
  return {2.0 * static_cast<double>(both) / static_cast<double>(a + b),
          static_cast<double>(both) / static_cast<double>(either)};
}

MeanStd mean_std(std::span<const double> values) {
  if (values.empty()) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / static_cast<double>(values.size()))};
}

std::vector<TruthSample> read_truth_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "frame,angle_deg") {
    throw IoError("truth CSV must start with 'frame,angle_deg'");
  }
  std::vector<TruthSample> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError("bad truth row: " + line);
    TruthSample s;
    const char* begin = line.data();
    const char* mid = begin + comma;
    const char* end = begin + line.size();
    auto r1 = std::from_chars(begin, mid, s.frame_index);
    auto r2 = std::from_chars(mid + 1, end, s.angle_deg);
    if (r1.ec != std::errc() || r1.ptr != mid || r2.ec != std::errc() ||
        r2.ptr != end) {
      throw IoError("bad truth row: " + line);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<TruthSample> read_truth_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return read_truth_csv(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_truth_csv(std::ostream& out, std::span<const TruthSample> truth) {
  out << "frame,angle_deg\n";
  for (const auto& s : truth) {
    out << s.frame_index << ',' << format_fixed3(s.angle_deg) << '\n';
  }
}

void write_truth_csv(const std::filesystem::path& path,
                     std::span<const TruthSample> truth) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_truth_csv(out, truth);
}

SlipError rotational_error(const SlipTrack& pred,
                           std::span<const TruthSample> truth) {
  std::map<std::uint64_t, const SlipSample*> by_frame;
  for (const auto& s : pred.samples) by_frame[s.frame_index] = &s;
  SlipError err;
  for (const auto& t : truth) {
    const auto it = by_frame.find(t.frame_index);
    if (it == by_frame.end()) {
      throw InvalidArgument("truth frame " + std::to_string(t.frame_index) +
                            " missing from the predicted track");
    }
    if (!it->second->valid) continue;
    err.per_frame_abs_deg.push_back(std::abs(it->second->slip_deg - t.angle_deg));
  }
  if (err.per_frame_abs_deg.empty()) {
    throw InvalidArgument("no comparable frames between prediction and truth");
  }
  const MeanStd ms = mean_std(err.per_frame_abs_deg);
  err.mean_abs_deg = ms.mean;
  err.std_deg = ms.std;
  err.final_abs_deg = err.per_frame_abs_deg.back();
  return err;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
  std::nth_element(values.begin(), mid, values.end());
  if (values.size() % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(values.begin(), mid);
  return 0.5 * (lower + upper);
}

StageTiming time_stage(std::string stage, const std::function<void()>& fn,
                       const TimingOptions& options) {
  if (options.repetitions < 1 || options.warmup < 0) {
    throw InvalidArgument("timing needs repetitions >= 1 and warmup >= 0");
  }
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < options.warmup; ++i) fn();
  StageTiming timing;
  timing.stage = std::move(stage);
  timing.seconds.reserve(static_cast<std::size_t>(options.repetitions));
  for (int i = 0; i < options.repetitions; ++i) {
    const auto start = clock::now();
    fn();
    const auto stop = clock::now();
    timing.seconds.push_back(
        std::chrono::duration<double>(stop - start).count());
  }
  const MeanStd ms = mean_std(timing.seconds);
  timing.mean_s = ms.mean;
  timing.std_s = ms.std;
  timing.median_s = median(timing.seconds);
  return timing;
}

}  // namespace tactslip
