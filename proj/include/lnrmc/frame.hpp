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

#ifndef LNRMC_FRAME_HPP_
#define LNRMC_FRAME_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lnrmc {

inline constexpr int kMacroblockSize = 16;

// Planar 8-bit image. One plane (grayscale) or three full-resolution planes
// (4:4:4 color). Planes are row-major, width*height samples each.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::vector<uint8_t>> planes;

  int plane_count() const { return static_cast<int>(planes.size()); }
  std::size_t pixels_per_plane() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  std::size_t total_samples() const {
    return pixels_per_plane() * planes.size();
  }

  bool operator==(const Frame&) const = default;
};

// Builds a frame filled with a constant sample value.
Frame make_frame(int width, int height, int plane_count, uint8_t fill = 0);

// Throws AlignmentError if the dimensions are not multiples of 16,
// ContractError on structural problems (plane count, plane sizes).
void validate_frame(const Frame& frame);

// Per-pixel partial derivatives of a quality score with respect to the frame
// samples, plus the score of the frame itself. Values are stored as f32; the
// scalar score keeps full f64 precision. Plane count is either 1 (score
// defined on luma only) or equal to the frame's plane count.
struct GradientField {
  int width = 0;
  int height = 0;
  double base_score = 0.0;
  std::vector<std::vector<float>> planes;

  int plane_count() const { return static_cast<int>(planes.size()); }
  std::size_t pixels_per_plane() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  // L2 norm over every stored plane, accumulated in double.
  double norm_l2() const;

  bool operator==(const GradientField&) const = default;
};

// Throws ContractError on structural problems, ValueError on non-finite
// entries.
void validate_gradient(const GradientField& field);

}  // namespace lnrmc

#endif  // LNRMC_FRAME_HPP_
