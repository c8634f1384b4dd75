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

#ifndef LNRMC_ENTROPY_HPP_
#define LNRMC_ENTROPY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lnrmc {

// MSB-first bit sink. finish() pads the final byte with zero bits.
class BitWriter {
 public:
  void put_bit(int bit);
  void put_bits(uint32_t value, int count);  // MSB of value's low `count` bits first
  void put_byte(uint8_t byte);               // only at byte boundaries
  void put_ue(uint32_t value);               // unsigned Exp-Golomb
  void put_se(int32_t value);                // signed Exp-Golomb

  std::size_t bit_count() const { return bit_count_; }
  std::vector<uint8_t> finish();

 private:
  std::vector<uint8_t> bytes_;
  std::size_t bit_count_ = 0;
  uint8_t pending_ = 0;
  int pending_bits_ = 0;
};

// MSB-first bit source over an externally owned buffer. Reads past the end
// throw LengthError; malformed Exp-Golomb prefixes throw FormatError.
class BitReader {
 public:
  explicit BitReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  int get_bit();
  uint32_t get_bits(int count);
  uint8_t get_byte();  // only at byte boundaries
  uint32_t get_ue();
  int32_t get_se();

  std::size_t bit_pos() const { return bit_pos_; }
  std::size_t byte_pos() const { return bit_pos_ / 8; }
  std::size_t bits_left() const { return bytes_.size() * 8 - bit_pos_; }

 private:
  std::span<const uint8_t> bytes_;
  std::size_t bit_pos_ = 0;
};

// Exp-Golomb code lengths in bits, without touching any stream.
std::size_t ue_bits(uint32_t value);
std::size_t se_bits(int32_t value);

// Zigzag scan order for an n x n block (anti-diagonal traversal with
// alternating direction, the JPEG order for size 4). Entry i is the raster
// index scanned at position i.
const std::vector<int>& zigzag_order(int size);

// Coefficient block coding: zigzag scan, (run, level) pairs with run as
// unsigned and level as signed Exp-Golomb, terminated by the reserved
// (run 0, level 0) end-of-block pair. Returns the number of bits appended.
std::size_t encode_block(BitWriter& writer, std::span<const int32_t> levels,
                         int size);

// Exact bit count encode_block would produce for these levels.
std::size_t rate_of(std::span<const int32_t> levels, int size);

std::vector<int32_t> decode_block(BitReader& reader, int size);

}  // namespace lnrmc

#endif  // LNRMC_ENTROPY_HPP_
