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

#ifndef UPART_LAYERS_CONVOLUTION_H_
#define UPART_LAYERS_CONVOLUTION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "upart/layers/feature_map.h"
#include "upart/layers/upsampler_spec.h"

namespace upart::layers {

enum class Overlap { kNone, kFull, kPartial };

// kNone iff length == stride; kFull iff length > stride and divisible by it.
Overlap ClassifyOverlap(int length, int stride);
const char* OverlapName(Overlap overlap);

// Dense weights indexed [out_channel][in_channel][tap].
class ConvFilters {
 public:
  ConvFilters(std::size_t out_channels, std::size_t in_channels, std::size_t length,
              std::vector<double> coeffs);

  std::size_t out_channels() const { return out_channels_; }
  std::size_t in_channels() const { return in_channels_; }
  std::size_t length() const { return length_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double operator()(std::size_t o, std::size_t c, std::size_t k) const {
    return coeffs_[(o * in_channels_ + c) * length_ + k];
  }

  friend bool operator==(const ConvFilters&, const ConvFilters&) = default;

 private:
  std::size_t out_channels_;
  std::size_t in_channels_;
  std::size_t length_;
  std::vector<double> coeffs_;
};

// Uniform weights in [-1/sqrt(L), 1/sqrt(L)] drawn from Xoshiro256(spec.seed).
// Transposed layers get out_channels filters; subpixel layers get
// factor * out_channels so the shuffle yields out_channels.
ConvFilters RandomFilters(const UpsamplerSpec& spec, std::size_t in_channels = 1,
                          std::size_t out_channels = 1);

// y_o[n] = sum_c sum_k x_c[k] * w_{o,c}[n - k*stride], full length
// (K-1)*stride + L, at stride times the input rate.
FeatureMap TransposedConv(const FeatureMap& x, const ConvFilters& filters, int stride);

// Stride-1 cross-correlation with zero "same" padding: floor((L-1)/2) taps of
// look-back, output length equals input length.
FeatureMap SameConv(const FeatureMap& x, const ConvFilters& filters);

// y_c[k*factor + m] = z_{c*factor + m}[k].
FeatureMap PeriodicShuffle(const FeatureMap& z, int factor);
FeatureMap PeriodicUnshuffle(const FeatureMap& y, int factor);

// SameConv to factor * C_out channels, then PeriodicShuffle.
FeatureMap SubpixelConv(const FeatureMap& x, const ConvFilters& filters, int factor);

}  // namespace upart::layers

#endif  // UPART_LAYERS_CONVOLUTION_H_
