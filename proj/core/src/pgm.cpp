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

#include "tactslip/pgm.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <sstream>

#include "tactslip/error.hpp"

namespace tactslip::pgm {

namespace {

constexpr std::uint8_t kForegroundThreshold = 128;

// Header token reader shared by the string and stream parsers.
class HeaderReader {
 public:
  explicit HeaderReader(std::istream& in) : in_(in) {}

  std::string token() {
    skip_space_and_comments();
    std::string tok;
    while (true) {
      const int ch = in_.peek();
      if (ch == std::char_traits<char>::eof() || std::isspace(ch) ||
          ch == '#') {
        break;
      }
      tok.push_back(static_cast<char>(in_.get()));
    }
    if (tok.empty()) throw IoError("truncated PGM header");
    return tok;
  }

  int integer(const char* what) {
    const std::string tok = token();
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
      throw IoError(std::string("bad PGM ") + what + ": '" + tok + "'");
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void end_of_header() {
    const int ch = in_.get();
    if (ch == std::char_traits<char>::eof() || !std::isspace(ch)) {
      throw IoError("malformed PGM header terminator");
    }
  }

 private:
  void skip_space_and_comments() {
    while (true) {
      const int ch = in_.peek();
      if (ch == '#') {
        in_.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
      } else if (ch != std::char_traits<char>::eof() && std::isspace(ch)) {
        in_.get();
      } else {
        return;
      }
    }
  }

  std::istream& in_;
};

}  // namespace

GrayFrame read_frame(std::istream& in) {
  HeaderReader header(in);
  if (header.token() != "P5") throw IoError("not a binary PGM (expected P5)");
  const int width = header.integer("width");
  const int height = header.integer("height");
  const int maxval = header.integer("maxval");
  if (width < 1 || height < 1) throw IoError("PGM dimensions must be positive");
  if (maxval != 255) {
    throw IoError("unsupported PGM maxval " + std::to_string(maxval) +
                  " (only 255)");
  }
  header.end_of_header();
  std::vector<std::uint8_t> raster(static_cast<std::size_t>(width) * height);
  in.read(reinterpret_cast<char*>(raster.data()),
          static_cast<std::streamsize>(raster.size()));
  if (static_cast<std::size_t>(in.gcount()) != raster.size()) {
    throw IoError("truncated PGM raster");
  }
  return GrayFrame(width, height, std::move(raster));
}

GrayFrame parse_frame(std::string_view bytes) {
  std::istringstream in{std::string(bytes)};
  return read_frame(in);
}

std::string encode_frame(const GrayFrame& frame) {
  std::string out = "P5\n" + std::to_string(frame.width()) + " " +
                    std::to_string(frame.height()) + "\n255\n";
  const auto raster = frame.data();
  out.append(reinterpret_cast<const char*>(raster.data()), raster.size());
  return out;
}

GrayFrame read_frame(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return read_frame(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_frame(const std::filesystem::path& path, const GrayFrame& frame) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  const std::string bytes = encode_frame(frame);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

BinaryMask to_mask(const GrayFrame& frame) {
  std::vector<std::uint8_t> bits(frame.data().size());
  const auto src = frame.data();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] = src[i] >= kForegroundThreshold ? 1 : 0;
  }
  return BinaryMask(frame.width(), frame.height(), std::move(bits));
}

GrayFrame from_mask(const BinaryMask& mask) {
  std::vector<std::uint8_t> levels(mask.size());
  const auto src = mask.data();
  for (std::size_t i = 0; i < levels.size(); ++i) levels[i] = src[i] ? 255 : 0;
  return GrayFrame(mask.width(), mask.height(), std::move(levels));
}

BinaryMask read_mask(const std::filesystem::path& path) {
  return to_mask(read_frame(path));
}

void write_mask(const std::filesystem::path& path, const BinaryMask& mask) {
  write_frame(path, from_mask(mask));
}

std::string encode_mask(const BinaryMask& mask) {
  return encode_frame(from_mask(mask));
}

}  // namespace tactslip::pgm
