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

#include "frame_source.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "tactslip/error.hpp"
#include "tactslip/pgm.hpp"

namespace tactslip::cli {

namespace fs = std::filesystem;

namespace {

std::optional<std::uint64_t> trailing_number(const std::string& stem) {
  auto end = stem.find_last_of("0123456789");
  if (end == std::string::npos) return std::nullopt;
  auto begin = end;
  while (begin > 0 && std::isdigit(static_cast<unsigned char>(stem[begin - 1]))) {
    --begin;
  }
  const std::string digits = stem.substr(begin, end - begin + 1);
  if (digits.size() > 18) return std::nullopt;
  return std::stoull(digits);
}

}  // namespace

std::vector<FrameFile> list_frames(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<FrameFile> frames;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".pgm") continue;
    if (entry.path().filename() == kReferenceFile) continue;
    const auto n = trailing_number(entry.path().stem().string());
    if (!n) {
      throw InvalidArgument("frame file has no number: " + entry.path().string());
    }
    frames.push_back({*n, entry.path()});
  }
  std::sort(frames.begin(), frames.end(), [](const FrameFile& a, const FrameFile& b) {
    return a.index < b.index;
  });
  for (std::size_t i = 1; i < frames.size(); ++i) {
    if (frames[i].index == frames[i - 1].index) {
      throw InvalidArgument("duplicate frame number " +
                            std::to_string(frames[i].index) + " in " + dir.string());
    }
  }
  return frames;
}

std::vector<fs::path> list_subdirs(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<GrayFrame> read_stream_frame(std::istream& in) {
  std::array<unsigned char, 4> prefix{};
  in.read(reinterpret_cast<char*>(prefix.data()), 4);
  if (in.gcount() == 0 && in.eof()) return std::nullopt;
  if (in.gcount() != 4) throw IoError("truncated length prefix on stream");
  const std::uint32_t n = static_cast<std::uint32_t>(prefix[0]) |
                          static_cast<std::uint32_t>(prefix[1]) << 8 |
                          static_cast<std::uint32_t>(prefix[2]) << 16 |
                          static_cast<std::uint32_t>(prefix[3]) << 24;
  std::string bytes(n, '\0');
  in.read(bytes.data(), static_cast<std::streamsize>(n));
  if (static_cast<std::uint32_t>(in.gcount()) != n) {
    throw IoError("stream ended inside a frame");
  }
  return pgm::parse_frame(bytes);
}

std::string label_of(const std::string& trial_name) {
  const auto us = trial_name.find_last_of('_');
  if (us == std::string::npos || us + 1 == trial_name.size()) return trial_name;
  const bool digits =
      std::all_of(trial_name.begin() + static_cast<std::ptrdiff_t>(us) + 1,
                  trial_name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  return digits ? trial_name.substr(0, us) : trial_name;
}

}  // namespace tactslip::cli
