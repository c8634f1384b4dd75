// Copyright 2026 the lnrmc authors
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

#include "lnrmc/imageio.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "lnrmc/errors.hpp"

namespace lnrmc {

namespace {

constexpr char kGradientMagic[] = "LNRMG1\n";  // 7 bytes
constexpr std::size_t kGradientMagicLen = 7;

void put_u32le(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<uint8_t>((v >> 24) & 0xFF));
}

void put_u64le(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xFF));
  }
}

uint32_t get_u32le(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint64_t get_u64le(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) {
    v = (v << 8) | p[i];
  }
  return v;
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open file: " + path);
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return bytes;
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw FormatError("cannot open file for writing: " + path);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw FormatError("write failed: " + path);
  }
}

// Reads one whitespace-delimited PNM header token, skipping '#' comments.
std::string next_pnm_token(const std::vector<uint8_t>& bytes,
                           std::size_t& pos) {
  while (pos < bytes.size()) {
    uint8_t c = bytes[pos];
    if (c == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(c)) {
      ++pos;
    } else {
      break;
    }
  }
  std::size_t start = pos;
  while (pos < bytes.size() && !std::isspace(bytes[pos]) &&
         bytes[pos] != '#') {
    ++pos;
  }
  if (pos == start) {
    throw FormatError("unexpected end of PNM header");
  }
  return std::string(bytes.begin() + static_cast<std::ptrdiff_t>(start),
                     bytes.begin() + static_cast<std::ptrdiff_t>(pos));
}

int parse_pnm_int(const std::string& token) {
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw FormatError("malformed PNM header field: " + token);
    }
  }
  try {
    return std::stoi(token);
  } catch (const std::exception&) {
    throw FormatError("malformed PNM header field: " + token);
  }
}

}  // namespace

Frame load_frame(const std::string& path) {
  const std::vector<uint8_t> bytes = read_file(path);
  std::size_t pos = 0;
  const std::string magic = next_pnm_token(bytes, pos);
  int plane_count = 0;
  if (magic == "P5") {
    plane_count = 1;
  } else if (magic == "P6") {
    plane_count = 3;
  } else {
    throw FormatError("unsupported PNM magic: " + magic);
  }
  const int width = parse_pnm_int(next_pnm_token(bytes, pos));
  const int height = parse_pnm_int(next_pnm_token(bytes, pos));
  const int maxval = parse_pnm_int(next_pnm_token(bytes, pos));
  if (maxval != 255) {
    throw FormatError("only maxval 255 is supported, got " +
                      std::to_string(maxval));
  }
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw FormatError("missing whitespace after PNM maxval");
  }
  ++pos;  // single whitespace byte before the raster

  if (width <= 0 || height <= 0) {
    throw FormatError("non-positive PNM dimensions");
  }
  if (width % kMacroblockSize != 0 || height % kMacroblockSize != 0) {
    throw AlignmentError("image dimensions " + std::to_string(width) + "x" +
                         std::to_string(height) +
                         " are not multiples of 16");
  }

  const std::size_t n = static_cast<std::size_t>(width) *
                        static_cast<std::size_t>(height);
  const std::size_t need = n * static_cast<std::size_t>(plane_count);
  if (bytes.size() - pos < need) {
    throw LengthError("PNM raster truncated: need " + std::to_string(need) +
                      " bytes, have " + std::to_string(bytes.size() - pos));
  }

  Frame frame;
  frame.width = width;
  frame.height = height;
  frame.planes.assign(static_cast<std::size_t>(plane_count),
                      std::vector<uint8_t>(n));
  if (plane_count == 1) {
    std::memcpy(frame.planes[0].data(), bytes.data() + pos, n);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      frame.planes[0][i] = bytes[pos + 3 * i + 0];
      frame.planes[1][i] = bytes[pos + 3 * i + 1];
      frame.planes[2][i] = bytes[pos + 3 * i + 2];
    }
  }
  return frame;
}

void save_frame(const Frame& frame, const std::string& path) {
  validate_frame(frame);
  std::vector<uint8_t> bytes;
  const std::string header =
      std::string(frame.plane_count() == 1 ? "P5" : "P6") + "\n" +
      std::to_string(frame.width) + " " + std::to_string(frame.height) +
      "\n255\n";
  bytes.insert(bytes.end(), header.begin(), header.end());
  const std::size_t n = frame.pixels_per_plane();
  if (frame.plane_count() == 1) {
    bytes.insert(bytes.end(), frame.planes[0].begin(), frame.planes[0].end());
  } else {
    bytes.reserve(bytes.size() + 3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      bytes.push_back(frame.planes[0][i]);
      bytes.push_back(frame.planes[1][i]);
      bytes.push_back(frame.planes[2][i]);
    }
  }
  write_file(path, bytes);
}

void write_gradient(const GradientField& field, const std::string& path) {
  validate_gradient(field);
  std::vector<uint8_t> bytes;
  bytes.insert(bytes.end(), kGradientMagic, kGradientMagic + kGradientMagicLen);
  put_u32le(bytes, static_cast<uint32_t>(field.width));
  put_u32le(bytes, static_cast<uint32_t>(field.height));
  bytes.push_back(static_cast<uint8_t>(field.plane_count()));
  put_u64le(bytes, std::bit_cast<uint64_t>(field.base_score));
  for (const auto& plane : field.planes) {
    for (float v : plane) {
      put_u32le(bytes, std::bit_cast<uint32_t>(v));
    }
  }
  write_file(path, bytes);
}

GradientField read_gradient(const std::string& path) {
  const std::vector<uint8_t> bytes = read_file(path);
  if (bytes.size() < kGradientMagicLen ||
      std::memcmp(bytes.data(), kGradientMagic, kGradientMagicLen) != 0) {
    throw FormatError("bad gradient file magic");
  }
  constexpr std::size_t kFixed = kGradientMagicLen + 4 + 4 + 1 + 8;
  if (bytes.size() < kFixed) {
    throw LengthError("gradient file header truncated");
  }
  std::size_t pos = kGradientMagicLen;
  GradientField field;
  field.width = static_cast<int>(get_u32le(bytes.data() + pos));
  pos += 4;
  field.height = static_cast<int>(get_u32le(bytes.data() + pos));
  pos += 4;
  const int plane_count = bytes[pos];
  pos += 1;
  field.base_score = std::bit_cast<double>(get_u64le(bytes.data() + pos));
  pos += 8;

  if (field.width <= 0 || field.height <= 0 || plane_count < 1 ||
      plane_count > 3) {
    throw FormatError("gradient file has invalid dimensions or plane count");
  }
  const std::size_t n = field.pixels_per_plane();
  const std::size_t need = 4 * n * static_cast<std::size_t>(plane_count);
  if (bytes.size() - pos != need) {
    throw LengthError("gradient payload has wrong length: need " +
                      std::to_string(need) + " bytes, have " +
                      std::to_string(bytes.size() - pos));
  }
  field.planes.assign(static_cast<std::size_t>(plane_count),
                      std::vector<float>(n));
  for (int p = 0; p < plane_count; ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      const float v =
          std::bit_cast<float>(get_u32le(bytes.data() + pos));
      pos += 4;
      if (!std::isfinite(v)) {
        throw ValueError("gradient file contains a non-finite value");
      }
      field.planes[static_cast<std::size_t>(p)][i] = v;
    }
  }
  if (!std::isfinite(field.base_score)) {
    throw ValueError("gradient base score is not finite");
  }
  return field;
}

}  // namespace lnrmc
