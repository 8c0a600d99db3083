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

#ifndef TACTSLIP_TOOLS_FRAME_SOURCE_HPP
#define TACTSLIP_TOOLS_FRAME_SOURCE_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "tactslip/mask.hpp"

namespace tactslip::cli {

inline constexpr const char* kReferenceFile = "reference.pgm";

struct FrameFile {
  std::uint64_t index = 0;  // numeric part of the file stem
  std::filesystem::path path;
};

// PGM files of `dir` except reference.pgm, ordered by the last run of digits
// in the file stem. Files without digits or with duplicate numbers throw
// InvalidArgument; a missing directory throws IoError.
std::vector<FrameFile> list_frames(const std::filesystem::path& dir);

// Subdirectories in lexicographic order.
std::vector<std::filesystem::path> list_subdirs(const std::filesystem::path& dir);

// Length-prefixed PGM stream: a 4-byte little-endian byte count followed by
// that many bytes of P5 data. Returns nullopt on a clean end of stream.
std::optional<GrayFrame> read_stream_frame(std::istream& in);

// Strips a trailing "_<digits>" from a trial name.
std::string label_of(const std::string& trial_name);

}  // namespace tactslip::cli

#endif  // TACTSLIP_TOOLS_FRAME_SOURCE_HPP
