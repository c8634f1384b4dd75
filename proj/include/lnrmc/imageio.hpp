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

#ifndef LNRMC_IMAGEIO_HPP_
#define LNRMC_IMAGEIO_HPP_

#include <string>

#include "lnrmc/frame.hpp"

namespace lnrmc {

// Loads a binary PGM (P5, one plane) or PPM (P6, three planes) file with
// maxval 255. Samples are kept exactly as stored; P6 input stays three
// full-resolution planes. Dimensions must be multiples of 16.
Frame load_frame(const std::string& path);

// Writes a frame as PGM (one plane) or PPM (three planes), maxval 255.
void save_frame(const Frame& frame, const std::string& path);

// Gradient file layout (all integers little-endian):
//   magic "LNRMG1\n", u32 width, u32 height, u8 plane_count,
//   f64 base_score, plane_count * (width*height) f32 values row-major.
void write_gradient(const GradientField& field, const std::string& path);
GradientField read_gradient(const std::string& path);

}  // namespace lnrmc

#endif  // LNRMC_IMAGEIO_HPP_
