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

#ifndef LNRMC_DCT_HPP_
#define LNRMC_DCT_HPP_

#include <span>
#include <vector>

#include "lnrmc/frame.hpp"

namespace lnrmc {

// Orthonormal 2-D DCT-II over square blocks of size 4 or 16. The basis is
// materialized as an explicit size x size matrix; forward applies it
// separably to rows then columns, so norms and inner products are preserved
// and distortion can be measured on coefficients directly.
class Dct {
 public:
  explicit Dct(int size);

  int size() const { return size_; }
  // Row-major size*size 1-D basis matrix; row k is the kth basis vector.
  const std::vector<double>& basis() const { return basis_; }

  // block and coeffs are size*size row-major; in-place (same span) is not
  // supported.
  void forward(std::span<const double> block, std::span<double> coeffs) const;
  void inverse(std::span<const double> coeffs, std::span<double> block) const;

  // Shared instances for the two supported sizes. Throws ContractError for
  // anything else.
  static const Dct& of(int size);

 private:
  int size_;
  std::vector<double> basis_;
};

// Transforms every block of one gradient plane with the block transform used
// for pixels. block_size must tile the plane exactly; blocks are returned in
// raster order, each block_size*block_size row-major.
std::vector<std::vector<double>> transform_gradient(const GradientField& field,
                                                    int plane,
                                                    int block_size);

}  // namespace lnrmc

#endif  // LNRMC_DCT_HPP_
