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

#include "tactslip/config.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "tactslip/error.hpp"

namespace tactslip {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_int_field(std::string_view key, std::string_view value) {
  const long long v = parse_integer(value);
  if (v < -2147483647LL || v > 2147483647LL) {
    throw InvalidArgument(std::string(key) + " out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

Manifest Manifest::parse(std::string_view text) {
  Manifest m;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("manifest line " + std::to_string(line_no) +
                            " has no '='");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw InvalidArgument("manifest line " + std::to_string(line_no) +
                            " has an empty key");
    }
    m.set(std::string(key), std::string(trim(line.substr(eq + 1))));
  }
  return m;
}

void Manifest::set(std::string key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> Manifest::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const std::string& Manifest::require(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw InvalidArgument("manifest is missing key '" + std::string(key) + "'");
}

std::string Manifest::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw InternalError("cannot format double");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

long long parse_integer(std::string_view text) {
  text = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

Manifest PipelineConfig::to_manifest() const {
  Manifest m;
  m.set("estimator", std::string(to_string(estimator)));
  m.set("circularity_threshold", format_double(orientation.circularity_threshold));
  m.set("min_area", format_double(orientation.min_area));
  m.set("threshold", std::to_string(segment.threshold));
  m.set("open_radius", std::to_string(segment.open_radius));
  m.set("close_radius", std::to_string(segment.close_radius));
  m.set("smoothing_window", std::to_string(smoothing_window));
  return m;
}

PipelineConfig PipelineConfig::from_manifest(const Manifest& manifest) {
  static const std::set<std::string, std::less<>> known = {
      "estimator",   "circularity_threshold", "min_area",        "threshold",
      "open_radius", "close_radius",          "smoothing_window"};
  PipelineConfig c;
  for (const auto& [key, value] : manifest.entries()) {
    if (!known.contains(key)) {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
    if (key == "estimator") {
      c.estimator = parse_estimator(value);
    } else if (key == "circularity_threshold") {
      c.orientation.circularity_threshold = parse_double(value);
    } else if (key == "min_area") {
      c.orientation.min_area = parse_double(value);
    } else if (key == "threshold") {
      c.segment.threshold = parse_int_field(key, value);
    } else if (key == "open_radius") {
      c.segment.open_radius = parse_int_field(key, value);
    } else if (key == "close_radius") {
      c.segment.close_radius = parse_int_field(key, value);
    } else if (key == "smoothing_window") {
      c.smoothing_window = parse_int_field(key, value);
    }
  }
  c.validate();
  return c;
}

void PipelineConfig::validate() const {
  if (!(orientation.circularity_threshold >= 1.0)) {
    throw InvalidArgument("circularity_threshold must be >= 1");
  }
  if (!(orientation.min_area >= 0.0)) {
    throw InvalidArgument("min_area must be >= 0");
  }
  if (segment.threshold < 0 || segment.threshold > 255) {
    throw InvalidArgument("threshold must be in [0, 255]");
  }
  if (segment.open_radius < 0 || segment.close_radius < 0) {
    throw InvalidArgument("open_radius and close_radius must be >= 0");
  }
  if (smoothing_window < 0) {
    throw InvalidArgument("smoothing_window must be >= 0");
  }
}

}  // namespace tactslip
