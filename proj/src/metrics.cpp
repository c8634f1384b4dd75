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

#include "lnrmc/metrics.hpp"

#include <cmath>
#include <string>

#include "lnrmc/errors.hpp"

namespace lnrmc {

RealImage RealImage::of(const Frame& frame) {
  RealImage image;
  image.width = frame.width;
  image.height = frame.height;
  image.planes.reserve(frame.planes.size());
  for (const auto& plane : frame.planes) {
    std::vector<double> p(plane.size());
    for (std::size_t i = 0; i < plane.size(); ++i) {
      p[i] = static_cast<double>(plane[i]);
    }
    image.planes.push_back(std::move(p));
  }
  return image;
}

TvScore::TvScore(double epsilon) : epsilon_(epsilon), name_("tv") {
  if (!(epsilon > 0.0)) {
    throw ContractError("TvScore epsilon must be positive");
  }
}

double TvScore::evaluate(const RealImage& image) const {
  const auto w = static_cast<std::size_t>(image.width);
  const auto h = static_cast<std::size_t>(image.height);
  const double eps2 = epsilon_ * epsilon_;
  double total = 0.0;
  for (const auto& p : image.planes) {
    double acc = 0.0;
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < w; ++c) {
        const double v = p[r * w + c];
        const double dh = c + 1 < w ? p[r * w + c + 1] - v : 0.0;
        const double dv = r + 1 < h ? p[(r + 1) * w + c] - v : 0.0;
        acc += std::sqrt(dh * dh + dv * dv + eps2);
      }
    }
    total += acc / static_cast<double>(w * h) - epsilon_;
  }
  return total;
}

GradientField TvScore::gradient(const RealImage& image) const {
  const auto w = static_cast<std::size_t>(image.width);
  const auto h = static_cast<std::size_t>(image.height);
  const double eps2 = epsilon_ * epsilon_;
  const double inv_n = 1.0 / static_cast<double>(w * h);

  GradientField field;
  field.width = image.width;
  field.height = image.height;
  field.planes.reserve(image.planes.size());
  double total = 0.0;

  std::vector<double> dh(w * h), dv(w * h), mag(w * h);
  for (const auto& p : image.planes) {
    double acc = 0.0;
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < w; ++c) {
        const std::size_t i = r * w + c;
        dh[i] = c + 1 < w ? p[i + 1] - p[i] : 0.0;
        dv[i] = r + 1 < h ? p[i + w] - p[i] : 0.0;
        mag[i] = std::sqrt(dh[i] * dh[i] + dv[i] * dv[i] + eps2);
        acc += mag[i];
      }
    }
    total += acc * inv_n - epsilon_;

    std::vector<float> grad(w * h);
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < w; ++c) {
        const std::size_t i = r * w + c;
        double g = -(dh[i] + dv[i]) / mag[i];
        if (c > 0) g += dh[i - 1] / mag[i - 1];
        if (r > 0) g += dv[i - w] / mag[i - w];
        grad[i] = static_cast<float>(g * inv_n);
      }
    }
    field.planes.push_back(std::move(grad));
  }
  field.base_score = total;
  return field;
}

ExternalGradientMetric::ExternalGradientMetric(GradientField field)
    : field_(std::move(field)), name_("external") {
  validate_gradient(field_);
}

double ExternalGradientMetric::evaluate(const RealImage& image) const {
  if (image.width != field_.width || image.height != field_.height) {
    throw ContractError("external gradient dimensions do not match image");
  }
  return field_.base_score;
}

GradientField ExternalGradientMetric::gradient(const RealImage& image) const {
  if (image.width != field_.width || image.height != field_.height) {
    throw ContractError("external gradient dimensions do not match image");
  }
  if (field_.plane_count() > static_cast<int>(image.planes.size())) {
    throw ContractError("external gradient has more planes than the image");
  }
  return field_;
}

GradientField fd_gradient(const Metric& metric, const Frame& frame, double h) {
  if (!(h > 0.0)) {
    throw ContractError("finite-difference step must be positive");
  }
  RealImage image = RealImage::of(frame);
  GradientField field;
  field.width = frame.width;
  field.height = frame.height;
  field.base_score = metric.evaluate(image);
  const double inv_2h = 1.0 / (2.0 * h);
  for (auto& plane : image.planes) {
    std::vector<float> grad(plane.size());
    for (std::size_t i = 0; i < plane.size(); ++i) {
      const double saved = plane[i];
      plane[i] = saved + h;
      const double up = metric.evaluate(image);
      plane[i] = saved - h;
      const double down = metric.evaluate(image);
      plane[i] = saved;
      grad[i] = static_cast<float>((up - down) * inv_2h);
    }
    field.planes.push_back(std::move(grad));
  }
  return field;
}

}  // namespace lnrmc
