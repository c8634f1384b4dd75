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

#include "lnrmc/dct.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lnrmc/errors.hpp"

namespace lnrmc {

Dct::Dct(int size) : size_(size) {
  if (size != 4 && size != 16) {
    throw ContractError("unsupported transform size " + std::to_string(size));
  }
  const auto n = static_cast<std::size_t>(size);
  basis_.resize(n * n);
  const double norm0 = std::sqrt(1.0 / size);
  const double normk = std::sqrt(2.0 / size);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = std::numbers::pi * (2.0 * j + 1.0) * k / (2.0 * size);
      basis_[k * n + j] = (k == 0 ? norm0 : normk) * std::cos(angle);
    }
  }
}

void Dct::forward(std::span<const double> block,
                  std::span<double> coeffs) const {
  const auto n = static_cast<std::size_t>(size_);
  if (block.size() != n * n || coeffs.size() != n * n) {
    throw ContractError("block span does not match transform size");
  }
  // rows: tmp[r][k] = sum_c block[r][c] * basis[k][c]
  std::vector<double> tmp(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t c = 0; c < n; ++c) {
        acc += block[r * n + c] * basis_[k * n + c];
      }
      tmp[r * n + k] = acc;
    }
  }
  // columns: coeffs[k][l] = sum_r basis[k][r] * tmp[r][l]
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      double acc = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        acc += basis_[k * n + r] * tmp[r * n + l];
      }
      coeffs[k * n + l] = acc;
    }
  }
}

void Dct::inverse(std::span<const double> coeffs,
                  std::span<double> block) const {
  const auto n = static_cast<std::size_t>(size_);
  if (block.size() != n * n || coeffs.size() != n * n) {
    throw ContractError("block span does not match transform size");
  }
  // columns first: tmp[r][l] = sum_k basis[k][r] * coeffs[k][l]
  std::vector<double> tmp(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t l = 0; l < n; ++l) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        acc += basis_[k * n + r] * coeffs[k * n + l];
      }
      tmp[r * n + l] = acc;
    }
  }
  // rows: block[r][c] = sum_l tmp[r][l] * basis[l][c]
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double acc = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        acc += tmp[r * n + l] * basis_[l * n + c];
      }
      block[r * n + c] = acc;
    }
  }
}

const Dct& Dct::of(int size) {
  static const Dct dct4(4);
  static const Dct dct16(16);
  if (size == 4) return dct4;
  if (size == 16) return dct16;
  throw ContractError("unsupported transform size " + std::to_string(size));
}

std::vector<std::vector<double>> transform_gradient(const GradientField& field,
                                                    int plane,
                                                    int block_size) {
  if (plane < 0 || plane >= field.plane_count()) {
    throw ContractError("gradient plane index out of range");
  }
  if (block_size <= 0 || field.width % block_size != 0 ||
      field.height % block_size != 0) {
    throw ContractError("block layout does not tile the gradient plane");
  }
  const Dct& dct = Dct::of(block_size);
  const auto bs = static_cast<std::size_t>(block_size);
  const auto w = static_cast<std::size_t>(field.width);
  const std::size_t bx = w / bs;
  const std::size_t by = static_cast<std::size_t>(field.height) / bs;
  const auto& src = field.planes[static_cast<std::size_t>(plane)];

  std::vector<std::vector<double>> out;
  out.reserve(bx * by);
  std::vector<double> block(bs * bs);
  for (std::size_t y = 0; y < by; ++y) {
    for (std::size_t x = 0; x < bx; ++x) {
      for (std::size_t r = 0; r < bs; ++r) {
        for (std::size_t c = 0; c < bs; ++c) {
          block[r * bs + c] =
              static_cast<double>(src[(y * bs + r) * w + (x * bs + c)]);
        }
      }
      std::vector<double> coeffs(bs * bs);
      dct.forward(block, coeffs);
      out.push_back(std::move(coeffs));
    }
  }
  return out;
}

}  // namespace lnrmc
