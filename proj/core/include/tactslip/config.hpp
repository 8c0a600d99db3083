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

#ifndef TACTSLIP_CONFIG_HPP
#define TACTSLIP_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tactslip/orientation.hpp"
#include "tactslip/segmenter.hpp"

namespace tactslip {

// Ordered flat "key = value" text, one entry per line. Blank lines and lines
// starting with '#' are ignored on parse. Values run to the end of the line
// with surrounding spaces trimmed.
class Manifest {
 public:
  static Manifest parse(std::string_view text);

  void set(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  // Throws InvalidArgument if the key is absent.
  const std::string& require(std::string_view key) const;

  std::string str() const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  friend bool operator==(const Manifest&, const Manifest&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);
double parse_double(std::string_view text);
long long parse_integer(std::string_view text);

struct PipelineConfig {
  Estimator estimator = Estimator::Skeleton;
  OrientationParams orientation;
  SegmentParams segment;
  int smoothing_window = 0;

  Manifest to_manifest() const;
  // Keys absent from the manifest keep their defaults; unknown keys and bad
  // values throw InvalidArgument.
  static PipelineConfig from_manifest(const Manifest& manifest);

  // Throws InvalidArgument on out-of-range fields.
  void validate() const;

  friend bool operator==(const PipelineConfig& a, const PipelineConfig& b) {
    return a.to_manifest() == b.to_manifest();
  }
};

}  // namespace tactslip

#endif  // TACTSLIP_CONFIG_HPP
