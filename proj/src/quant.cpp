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

#include "lnrmc/quant.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lnrmc/errors.hpp"

namespace lnrmc {

double step_of(int qp) {
  if (qp < kQpMin || qp > kQpMax) {
    throw ContractError("qp " + std::to_string(qp) + " outside [0, 51]");
  }
  // Split the exponent into an integer octave and one of six fractional
  // steps, so doubling per six qp steps is exact.
  static const std::array<double, 6> kSixth = [] {
    std::array<double, 6> t{};
    for (int r = 0; r < 6; ++r) t[static_cast<std::size_t>(r)] = std::exp2(r / 6.0);
    return t;
  }();
  const int e = qp - 4;
  const int octave = e >= 0 ? e / 6 : -((-e + 5) / 6);
  const int rem = e - 6 * octave;
  return std::ldexp(kSixth[static_cast<std::size_t>(rem)], octave);
}

std::vector<int32_t> quantize(std::span<const double> coeffs, double step) {
  if (!(step > 0.0)) {
    throw ContractError("quantizer step must be positive");
  }
  std::vector<int32_t> levels(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    levels[i] = static_cast<int32_t>(std::lround(coeffs[i] / step));
  }
  return levels;
}

std::vector<double> dequantize(std::span<const int32_t> levels, double step) {
  if (!(step > 0.0)) {
    throw ContractError("quantizer step must be positive");
  }
  std::vector<double> coeffs(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    coeffs[i] = step * static_cast<double>(levels[i]);
  }
  return coeffs;
}

}  // namespace lnrmc
