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

#include "upart/layers/apply.h"

#include <stdexcept>

#include "upart/layers/convolution.h"
#include "upart/layers/feature_map.h"
#include "upart/layers/interpolation.h"
#include "upart/layers/wavelet.h"

namespace upart::layers {
namespace {

FeatureMap SingleChannel(std::span<const double> x) {
  return FeatureMap({std::vector<double>(x.begin(), x.end())}, 1.0);
}

}  // namespace

std::vector<double> UpsampleChannel(std::span<const double> x, const UpsamplerSpec& spec) {
  spec.Validate();
  switch (spec.kind) {
    case LayerKind::kStretch:
      return Stretch(x, spec.factor);
    case LayerKind::kNearest:
      return NearestNeighbor(x, spec.factor);
    case LayerKind::kLinear:
    case LayerKind::kSinc:
      return Interpolate(x, spec.factor, FilterFor(spec));
    case LayerKind::kTransposed: {
      const auto y = TransposedConv(SingleChannel(x), RandomFilters(spec), spec.EffectiveStride());
      return y.data().front();
    }
    case LayerKind::kSubpixel: {
      const auto y = SubpixelConv(SingleChannel(x), RandomFilters(spec), spec.factor);
      return y.data().front();
    }
    case LayerKind::kWaveletLazy:
    case LayerKind::kWaveletHaar:
    case LayerKind::kWaveletLifting: {
      const int levels = spec.WaveletLevels();
      CascadeBands bands;
      bands.coarse.assign(x.begin(), x.end());
      for (int level = levels - 1; level >= 0; --level) {
        bands.details.emplace_back(x.size() << level, 0.0);
      }
      bands.original_length = x.size() << levels;
      return CascadeSynthesis(bands, WaveletBaseFor(spec));
    }
  }
  throw std::invalid_argument("unhandled layer kind");
}

signals::Signal Upsample(const signals::Signal& x, const UpsamplerSpec& spec) {
  std::vector<std::vector<double>> out;
  out.reserve(x.channels());
  for (std::size_t c = 0; c < x.channels(); ++c) out.push_back(UpsampleChannel(x.channel(c), spec));
  const int rate = spec.kind == LayerKind::kTransposed ? spec.EffectiveStride() : spec.factor;
  return signals::Signal(std::move(out), x.sample_rate_hz() * rate);
}

signals::Signal WaveletRoundTrip(const signals::Signal& x, const UpsamplerSpec& spec) {
  spec.Validate();
  const auto base = WaveletBaseFor(spec);
  const int levels = spec.WaveletLevels();
  std::vector<std::vector<double>> out;
  for (std::size_t c = 0; c < x.channels(); ++c) {
    out.push_back(CascadeSynthesis(CascadeAnalysis(x.channel(c), base, levels), base));
  }
  return signals::Signal(std::move(out), x.sample_rate_hz());
}

}  // namespace upart::layers
