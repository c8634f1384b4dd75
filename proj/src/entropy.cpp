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

#include "lnrmc/entropy.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lnrmc/errors.hpp"

namespace lnrmc {

void BitWriter::put_bit(int bit) {
  pending_ = static_cast<uint8_t>((pending_ << 1) | (bit & 1));
  ++pending_bits_;
  ++bit_count_;
  if (pending_bits_ == 8) {
    bytes_.push_back(pending_);
    pending_ = 0;
    pending_bits_ = 0;
  }
}

void BitWriter::put_bits(uint32_t value, int count) {
  for (int i = count - 1; i >= 0; --i) {
    put_bit(static_cast<int>((value >> i) & 1u));
  }
}

void BitWriter::put_byte(uint8_t byte) {
  if (pending_bits_ != 0) {
    throw ContractError("put_byte requires byte alignment");
  }
  bytes_.push_back(byte);
  bit_count_ += 8;
}

void BitWriter::put_ue(uint32_t value) {
  const uint32_t code = value + 1;  // value < 2^32 - 1 in practice
  const int width = std::bit_width(code);
  for (int i = 0; i < width - 1; ++i) put_bit(0);
  put_bits(code, width);
}

void BitWriter::put_se(int32_t value) {
  // 0 -> 0, 1 -> 1, -1 -> 2, 2 -> 3, -2 -> 4, ...
  const uint32_t mapped =
      value > 0 ? 2u * static_cast<uint32_t>(value) - 1u
                : 2u * static_cast<uint32_t>(-static_cast<int64_t>(value));
  put_ue(mapped);
}

std::vector<uint8_t> BitWriter::finish() {
  while (pending_bits_ != 0) {
    put_bit(0);
    --bit_count_;  // padding does not count as payload
  }
  return std::move(bytes_);
}

int BitReader::get_bit() {
  if (bit_pos_ >= bytes_.size() * 8) {
    throw LengthError("bitstream exhausted at byte " +
                      std::to_string(byte_pos()));
  }
  const uint8_t byte = bytes_[bit_pos_ / 8];
  const int bit = (byte >> (7 - (bit_pos_ % 8))) & 1;
  ++bit_pos_;
  return bit;
}

uint32_t BitReader::get_bits(int count) {
  uint32_t v = 0;
  for (int i = 0; i < count; ++i) {
    v = (v << 1) | static_cast<uint32_t>(get_bit());
  }
  return v;
}

uint8_t BitReader::get_byte() {
  if (bit_pos_ % 8 != 0) {
    throw ContractError("get_byte requires byte alignment");
  }
  return static_cast<uint8_t>(get_bits(8));
}

uint32_t BitReader::get_ue() {
  int zeros = 0;
  while (get_bit() == 0) {
    ++zeros;
    if (zeros > 31) {
      throw FormatError("exp-golomb prefix too long at byte " +
                        std::to_string(byte_pos()));
    }
  }
  uint32_t code = 1;
  for (int i = 0; i < zeros; ++i) {
    code = (code << 1) | static_cast<uint32_t>(get_bit());
  }
  return code - 1;
}

int32_t BitReader::get_se() {
  const uint32_t mapped = get_ue();
  if (mapped % 2 == 1) {
    return static_cast<int32_t>((mapped + 1) / 2);
  }
  return -static_cast<int32_t>(mapped / 2);
}

std::size_t ue_bits(uint32_t value) {
  const int width = std::bit_width(value + 1);
  return static_cast<std::size_t>(2 * width - 1);
}

std::size_t se_bits(int32_t value) {
  const uint32_t mapped =
      value > 0 ? 2u * static_cast<uint32_t>(value) - 1u
                : 2u * static_cast<uint32_t>(-static_cast<int64_t>(value));
  return ue_bits(mapped);
}

const std::vector<int>& zigzag_order(int size) {
  auto build = [](int n) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int s = 0; s <= 2 * (n - 1); ++s) {
      const int r_lo = std::max(0, s - (n - 1));
      const int r_hi = std::min(s, n - 1);
      if (s % 2 == 1) {
        for (int r = r_lo; r <= r_hi; ++r) order.push_back(r * n + (s - r));
      } else {
        for (int r = r_hi; r >= r_lo; --r) order.push_back(r * n + (s - r));
      }
    }
    return order;
  };
  static const std::vector<int> z4 = build(4);
  static const std::vector<int> z16 = build(16);
  if (size == 4) return z4;
  if (size == 16) return z16;
  throw ContractError("unsupported block size " + std::to_string(size));
}

std::size_t encode_block(BitWriter& writer, std::span<const int32_t> levels,
                         int size) {
  const auto& order = zigzag_order(size);
  if (levels.size() != order.size()) {
    throw ContractError("level count does not match block size");
  }
  const std::size_t start = writer.bit_count();
  uint32_t run = 0;
  for (int pos : order) {
    const int32_t level = levels[static_cast<std::size_t>(pos)];
    if (level == 0) {
      ++run;
    } else {
      writer.put_ue(run);
      writer.put_se(level);
      run = 0;
    }
  }
  writer.put_ue(0);  // end of block
  writer.put_se(0);
  return writer.bit_count() - start;
}

std::size_t rate_of(std::span<const int32_t> levels, int size) {
  const auto& order = zigzag_order(size);
  if (levels.size() != order.size()) {
    throw ContractError("level count does not match block size");
  }
  std::size_t bits = 0;
  uint32_t run = 0;
  for (int pos : order) {
    const int32_t level = levels[static_cast<std::size_t>(pos)];
    if (level == 0) {
      ++run;
    } else {
      bits += ue_bits(run) + se_bits(level);
      run = 0;
    }
  }
  bits += ue_bits(0) + se_bits(0);
  return bits;
}

std::vector<int32_t> decode_block(BitReader& reader, int size) {
  const auto& order = zigzag_order(size);
  std::vector<int32_t> levels(order.size(), 0);
  std::size_t scan = 0;
  for (;;) {
    const uint32_t run = reader.get_ue();
    const int32_t level = reader.get_se();
    if (run == 0 && level == 0) break;
    scan += run;
    if (scan >= order.size()) {
      throw FormatError("coefficient run overflows block at byte " +
                        std::to_string(reader.byte_pos()));
    }
    levels[static_cast<std::size_t>(order[scan])] = level;
    ++scan;
  }
  return levels;
}

}  // namespace lnrmc
