// Copyright 2026 The upart Authors
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

#include "upart/layers/interpolation.h"

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace upart::layers {
namespace {

void RequireFactor(int factor) {
  if (factor < 1) throw std::invalid_argument("upsampling factor must be positive");
}

double NormalizedSinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

signals::Signal PerChannel(
    const signals::Signal& x, int factor,
    const std::function<std::vector<double>(std::span<const double>)>& op) {
  std::vector<std::vector<double>> out;
  out.reserve(x.channels());
  for (std::size_t c = 0; c < x.channels(); ++c) out.push_back(op(x.channel(c)));
  return signals::Signal(std::move(out), x.sample_rate_hz() * factor);
}

}  // namespace

InterpolationFilter ImpulseFilter() { return {{1.0}, 0}; }

InterpolationFilter RectangularFilter(int factor) {
  RequireFactor(factor);
  return {std::vector<double>(static_cast<std::size_t>(factor), 1.0), 0};
}

InterpolationFilter TriangularFilter(int factor) {
  RequireFactor(factor);
  std::vector<double> t(static_cast<std::size_t>(2 * factor - 1));
  for (int i = 0; i < 2 * factor - 1; ++i) {
    t[static_cast<std::size_t>(i)] = 1.0 - std::abs(i - (factor - 1)) / static_cast<double>(factor);
  }
  return {std::move(t), factor - 1};
}

InterpolationFilter SincFilter(int factor, int taps) {
  RequireFactor(factor);
  if (taps < 1 || taps % 2 == 0) throw std::invalid_argument("sinc taps must be odd");
  const int half = (taps - 1) / 2;
  std::vector<double> h(static_cast<std::size_t>(taps));
  for (int i = -half; i <= half; ++i) {
    // Hann window that stays nonzero on the outermost taps.
    const double w = 0.5 * (1.0 + std::cos(std::numbers::pi * i / (half + 1)));
    h[static_cast<std::size_t>(i + half)] = w * NormalizedSinc(static_cast<double>(i) / factor);
  }
  for (int branch = 0; branch < factor; ++branch) {
    double sum = 0.0;
    for (int i = -half; i <= half; ++i) {
      if (((i % factor) + factor) % factor == branch) sum += h[static_cast<std::size_t>(i + half)];
    }
    for (int i = -half; i <= half; ++i) {
      if (((i % factor) + factor) % factor == branch) h[static_cast<std::size_t>(i + half)] /= sum;
    }
  }
  return {std::move(h), half};
}

InterpolationFilter FilterFor(const UpsamplerSpec& spec) {
  switch (spec.kind) {
    case LayerKind::kStretch: return ImpulseFilter();
    case LayerKind::kNearest: return RectangularFilter(spec.factor);
    case LayerKind::kLinear: return TriangularFilter(spec.factor);
    case LayerKind::kSinc: return SincFilter(spec.factor, spec.EffectiveSincTaps());
    default:
      throw std::invalid_argument(std::string("no fixed interpolation filter for layer ") +
                                  LayerKindName(spec.kind));
  }
}

std::vector<double> Stretch(std::span<const double> x, int factor, int phase) {
  RequireFactor(factor);
  if (phase < 0 || phase >= factor) throw std::invalid_argument("stretch phase out of range");
  const auto m = static_cast<std::size_t>(factor);
  std::vector<double> y(x.size() * m, 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) y[k * m + static_cast<std::size_t>(phase)] = x[k];
  return y;
}

std::vector<double> Interpolate(std::span<const double> x, int factor,
                                const InterpolationFilter& filter) {
  RequireFactor(factor);
  const long n_out = static_cast<long>(x.size()) * factor;
  const long taps = static_cast<long>(filter.taps.size());
  std::vector<double> y(static_cast<std::size_t>(n_out), 0.0);
  // Scatter each input sample through the kernel: it lands on
  // n = k*factor - delay + i.
  for (long k = 0; k < static_cast<long>(x.size()); ++k) {
    const double v = x[static_cast<std::size_t>(k)];
    if (v == 0.0) continue;
    const long base = k * factor - filter.delay;
    for (long i = 0; i < taps; ++i) {
      const long n = base + i;
      if (n >= 0 && n < n_out) y[static_cast<std::size_t>(n)] += v * filter.taps[static_cast<std::size_t>(i)];
    }
  }
  return y;
}

std::vector<double> NearestNeighbor(std::span<const double> x, int factor) {
  RequireFactor(factor);
  const auto m = static_cast<std::size_t>(factor);
  std::vector<double> y(x.size() * m);
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (std::size_t j = 0; j < m; ++j) y[k * m + j] = x[k];
  }
  return y;
}

std::vector<double> LinearInterpolate(std::span<const double> x, int factor) {
  return Interpolate(x, factor, TriangularFilter(factor));
}

std::vector<double> SincInterpolate(std::span<const double> x, int factor, int taps) {
  if (taps < 4 * factor + 1) throw std::invalid_argument("sinc taps must be at least 4 * factor + 1");
  return Interpolate(x, factor, SincFilter(factor, taps));
}

signals::Signal Stretch(const signals::Signal& x, int factor) {
  return PerChannel(x, factor, [factor](std::span<const double> c) { return Stretch(c, factor); });
}

signals::Signal NearestNeighbor(const signals::Signal& x, int factor) {
  return PerChannel(x, factor,
                    [factor](std::span<const double> c) { return NearestNeighbor(c, factor); });
}

signals::Signal LinearInterpolate(const signals::Signal& x, int factor) {
  return PerChannel(x, factor,
                    [factor](std::span<const double> c) { return LinearInterpolate(c, factor); });
}

signals::Signal SincInterpolate(const signals::Signal& x, int factor, int taps) {
  return PerChannel(x, factor, [factor, taps](std::span<const double> c) {
    return SincInterpolate(c, factor, taps);
  });
}

}  // namespace upart::layers
