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

#ifndef LNRMC_QUANT_HPP_
#define LNRMC_QUANT_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace lnrmc {

inline constexpr int kQpMin = 0;
inline constexpr int kQpMax = 51;
inline constexpr int kDeltaQpMin = -4;
inline constexpr int kDeltaQpMax = 4;

// Quantizer step for a quality parameter: 2^((qp - 4) / 6). Computed so that
// step_of(qp + 6) == 2 * step_of(qp) holds exactly in floating point.
// qp must be in [0, 51]; throws ContractError otherwise.
double step_of(int qp);

// Base quantizer plus a per-macroblock offset. The effective parameter is
// clamped to [0, 51].
struct QuantParams {
  int qp = 0;
  int delta_qp = 0;

  int effective_qp() const {
    return std::clamp(qp + delta_qp, kQpMin, kQpMax);
  }
  double step() const { return step_of(effective_qp()); }
};

// Uniform scalar quantizer, round half away from zero. Total function for
// step > 0.
std::vector<int32_t> quantize(std::span<const double> coeffs, double step);

// Reconstruction: coeff_k = step * level_k.
std::vector<double> dequantize(std::span<const int32_t> levels, double step);

}  // namespace lnrmc

#endif  // LNRMC_QUANT_HPP_
