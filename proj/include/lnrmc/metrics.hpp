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

#ifndef LNRMC_METRICS_HPP_
#define LNRMC_METRICS_HPP_

#include <string>
#include <vector>

#include "lnrmc/frame.hpp"

namespace lnrmc {

// Real-valued image used for metric evaluation, so scores and derivative
// checks can be taken at off-integer sample values.
struct RealImage {
  int width = 0;
  int height = 0;
  std::vector<std::vector<double>> planes;

  static RealImage of(const Frame& frame);
};

// A no-reference quality score b(.) with its per-sample derivatives. Lower
// scores mean higher quality. evaluate is deterministic; gradient dimensions
// match the image.
class Metric {
 public:
  virtual ~Metric() = default;

  virtual const std::string& name() const = 0;
  virtual double evaluate(const RealImage& image) const = 0;
  virtual GradientField gradient(const RealImage& image) const = 0;

  double evaluate(const Frame& frame) const {
    return evaluate(RealImage::of(frame));
  }
  GradientField gradient(const Frame& frame) const {
    return gradient(RealImage::of(frame));
  }
};

// Built-in smoothed total-variation score. Per plane:
//   b = (1/n) * sum_p sqrt(dh(p)^2 + dv(p)^2 + eps^2) - eps
// with forward differences and replicated borders (last row/column
// differences are zero); plane scores are summed. Constant images score 0;
// noise and banding raise the score. Differentiable everywhere, with an
// analytic gradient.
class TvScore : public Metric {
 public:
  explicit TvScore(double epsilon = 1.0);

  const std::string& name() const override { return name_; }
  double epsilon() const { return epsilon_; }
  double evaluate(const RealImage& image) const override;
  GradientField gradient(const RealImage& image) const override;

  using Metric::evaluate;
  using Metric::gradient;

 private:
  double epsilon_;
  std::string name_;
};

// Wraps an externally computed gradient (and the matching score) as a
// metric. gradient() hands back the stored field after a dimension check;
// evaluate() returns the stored score and is only meaningful for the image
// the field was computed from.
class ExternalGradientMetric : public Metric {
 public:
  explicit ExternalGradientMetric(GradientField field);

  const std::string& name() const override { return name_; }
  double evaluate(const RealImage& image) const override;
  GradientField gradient(const RealImage& image) const override;

  using Metric::evaluate;
  using Metric::gradient;

 private:
  GradientField field_;
  std::string name_;
};

// Central-difference gradient, (b(x + h e_k) - b(x - h e_k)) / 2h per
// sample. An oracle for analytic gradients and a fallback for metrics
// without one; quadratic cost in the pixel count, test use only.
GradientField fd_gradient(const Metric& metric, const Frame& frame, double h);

}  // namespace lnrmc

#endif  // LNRMC_METRICS_HPP_
