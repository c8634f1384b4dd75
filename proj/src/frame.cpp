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

#include "lnrmc/frame.hpp"

#include <cmath>
#include <string>

#include "lnrmc/errors.hpp"

namespace lnrmc {

Frame make_frame(int width, int height, int plane_count, uint8_t fill) {
  Frame f;
  f.width = width;
  f.height = height;
  f.planes.assign(static_cast<std::size_t>(plane_count),
                  std::vector<uint8_t>(f.pixels_per_plane(), fill));
  return f;
}

void validate_frame(const Frame& frame) {
  if (frame.width <= 0 || frame.height <= 0) {
    throw ContractError("frame has non-positive dimensions");
  }
  if (frame.width % kMacroblockSize != 0 ||
      frame.height % kMacroblockSize != 0) {
    throw AlignmentError("frame dimensions " + std::to_string(frame.width) +
                         "x" + std::to_string(frame.height) +
                         " are not multiples of 16");
  }
  if (frame.plane_count() != 1 && frame.plane_count() != 3) {
    throw ContractError("frame must have 1 or 3 planes, got " +
                        std::to_string(frame.plane_count()));
  }
  for (const auto& plane : frame.planes) {
    if (plane.size() != frame.pixels_per_plane()) {
      throw ContractError("plane sample count does not match frame size");
    }
  }
}

double GradientField::norm_l2() const {
  double acc = 0.0;
  for (const auto& plane : planes) {
    for (float v : plane) {
      acc += static_cast<double>(v) * static_cast<double>(v);
    }
  }
  return std::sqrt(acc);
}

void validate_gradient(const GradientField& field) {
  if (field.width <= 0 || field.height <= 0) {
    throw ContractError("gradient field has non-positive dimensions");
  }
  if (field.planes.empty()) {
    throw ContractError("gradient field has no planes");
  }
  for (const auto& plane : field.planes) {
    if (plane.size() != field.pixels_per_plane()) {
      throw ContractError("gradient plane size does not match dimensions");
    }
    for (float v : plane) {
      if (!std::isfinite(v)) {
        throw ValueError("gradient field contains a non-finite value");
      }
    }
  }
  if (!std::isfinite(field.base_score)) {
    throw ValueError("gradient base score is not finite");
  }
}

}  // namespace lnrmc
