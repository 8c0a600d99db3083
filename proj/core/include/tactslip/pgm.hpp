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

#ifndef TACTSLIP_PGM_HPP
#define TACTSLIP_PGM_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tactslip/mask.hpp"

namespace tactslip::pgm {

// Binary portable graymap ("P5", maxval 255). The writer emits exactly
//   "P5\n<width> <height>\n255\n" followed by width*height bytes,
// so anything it writes reads back bit-identically. The reader also accepts
// '#' comments and arbitrary whitespace in the header.
//
// Masks load with intensity >= 128 as foreground and save foreground as 255.

GrayFrame parse_frame(std::string_view bytes);
std::string encode_frame(const GrayFrame& frame);

GrayFrame read_frame(std::istream& in);
GrayFrame read_frame(const std::filesystem::path& path);
void write_frame(const std::filesystem::path& path, const GrayFrame& frame);

BinaryMask to_mask(const GrayFrame& frame);
GrayFrame from_mask(const BinaryMask& mask);

BinaryMask read_mask(const std::filesystem::path& path);
void write_mask(const std::filesystem::path& path, const BinaryMask& mask);
std::string encode_mask(const BinaryMask& mask);

}  // namespace tactslip::pgm

#endif  // TACTSLIP_PGM_HPP
