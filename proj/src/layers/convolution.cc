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

#include "upart/layers/convolution.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "upart/signals/random.h"

namespace upart::layers {

Overlap ClassifyOverlap(int length, int stride) {
  if (length < 1 || stride < 1) throw std::invalid_argument("length and stride must be >= 1");
  if (length == stride) return Overlap::kNone;
  if (length > stride && length % stride == 0) return Overlap::kFull;
  return Overlap::kPartial;
}

const char* OverlapName(Overlap overlap) {
  switch (overlap) {
    case Overlap::kNone: return "no-overlap";
    case Overlap::kFull: return "full-overlap";
    case Overlap::kPartial: return "partial-overlap";
  }
  return "unknown";
}

ConvFilters::ConvFilters(std::size_t out_channels, std::size_t in_channels, std::size_t length,
                         std::vector<double> coeffs)
    : out_channels_(out_channels),
      in_channels_(in_channels),
      length_(length),
      coeffs_(std::move(coeffs)) {
  if (out_channels_ == 0 || in_channels_ == 0 || length_ == 0) {
    throw std::invalid_argument("filter dimensions must be positive");
  }
  if (coeffs_.size() != out_channels_ * in_channels_ * length_) {
    throw std::invalid_argument("filter coefficient count does not match its shape");
  }
  for (double v : coeffs_) {
    if (!std::isfinite(v)) throw std::invalid_argument("filter coefficients must be finite");
  }
}

ConvFilters RandomFilters(const UpsamplerSpec& spec, std::size_t in_channels,
                          std::size_t out_channels) {
  if (spec.filter_length < 1) throw std::invalid_argument("filter length must be >= 1");
  std::size_t outs = out_channels;
  if (spec.kind == LayerKind::kSubpixel) outs *= static_cast<std::size_t>(spec.factor);
  const auto length = static_cast<std::size_t>(spec.filter_length);
  const double bound = 1.0 / std::sqrt(static_cast<double>(length));

  signals::Xoshiro256 rng(spec.seed);
  std::vector<double> w(outs * in_channels * length);
  for (auto& v : w) v = rng.Uniform(-bound, bound);
  return ConvFilters(outs, in_channels, length, std::move(w));
}

FeatureMap TransposedConv(const FeatureMap& x, const ConvFilters& filters, int stride) {
  if (filters.in_channels() != x.channels()) {
    throw std::invalid_argument("filter has " + std::to_string(filters.in_channels()) +
                                " input channels, feature map has " +
                                std::to_string(x.channels()));
  }
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  const auto s = static_cast<std::size_t>(stride);
  const std::size_t len = filters.length();
  if (len < s) throw std::invalid_argument("transposed convolution needs length >= stride");

  const std::size_t k_in = x.length();
  const std::size_t n_out = k_in == 0 ? 0 : (k_in - 1) * s + len;
  std::vector<std::vector<double>> y(filters.out_channels(), std::vector<double>(n_out, 0.0));
  for (std::size_t o = 0; o < filters.out_channels(); ++o) {
    auto& out = y[o];
    for (std::size_t c = 0; c < x.channels(); ++c) {
      const auto in = x.channel(c);
      for (std::size_t k = 0; k < k_in; ++k) {
        const double v = in[k];
        for (std::size_t i = 0; i < len; ++i) out[k * s + i] += v * filters(o, c, i);
      }
    }
  }
  return FeatureMap(std::move(y), x.sample_rate_hz() * stride);
}

FeatureMap SameConv(const FeatureMap& x, const ConvFilters& filters) {
  if (filters.in_channels() != x.channels()) {
    throw std::invalid_argument("filter input channels do not match the feature map");
  }
  const long n = static_cast<long>(x.length());
  const long len = static_cast<long>(filters.length());
  const long pad = (len - 1) / 2;
  std::vector<std::vector<double>> z(filters.out_channels(),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (std::size_t o = 0; o < filters.out_channels(); ++o) {
    for (std::size_t c = 0; c < x.channels(); ++c) {
      const auto in = x.channel(c);
      for (long t = 0; t < n; ++t) {
        double acc = 0.0;
        for (long i = 0; i < len; ++i) {
          const long src = t + i - pad;
          if (src >= 0 && src < n) {
            acc += in[static_cast<std::size_t>(src)] * filters(o, c, static_cast<std::size_t>(i));
          }
        }
        z[o][static_cast<std::size_t>(t)] += acc;
      }
    }
  }
  return FeatureMap(std::move(z), x.sample_rate_hz());
}

FeatureMap PeriodicShuffle(const FeatureMap& z, int factor) {
  if (factor < 1) throw std::invalid_argument("shuffle factor must be >= 1");
  const auto m = static_cast<std::size_t>(factor);
  if (z.channels() % m != 0) {
    throw std::invalid_argument("channel count " + std::to_string(z.channels()) +
                                " is not divisible by factor " + std::to_string(factor));
  }
  const std::size_t c_out = z.channels() / m;
  const std::size_t k_in = z.length();
  std::vector<std::vector<double>> y(c_out, std::vector<double>(k_in * m));
  for (std::size_t c = 0; c < c_out; ++c) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto src = z.channel(c * m + j);
      for (std::size_t k = 0; k < k_in; ++k) y[c][k * m + j] = src[k];
    }
  }
  return FeatureMap(std::move(y), z.sample_rate_hz() * factor);
}

FeatureMap PeriodicUnshuffle(const FeatureMap& y, int factor) {
  if (factor < 1) throw std::invalid_argument("shuffle factor must be >= 1");
  const auto m = static_cast<std::size_t>(factor);
  if (y.length() % m != 0) {
    throw std::invalid_argument("length is not divisible by the shuffle factor");
  }
  const std::size_t k_out = y.length() / m;
  std::vector<std::vector<double>> z(y.channels() * m, std::vector<double>(k_out));
  for (std::size_t c = 0; c < y.channels(); ++c) {
    const auto src = y.channel(c);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < k_out; ++k) z[c * m + j][k] = src[k * m + j];
    }
  }
  return FeatureMap(std::move(z), y.sample_rate_hz() / factor);
}

FeatureMap SubpixelConv(const FeatureMap& x, const ConvFilters& filters, int factor) {
  if (factor < 1 || filters.out_channels() % static_cast<std::size_t>(factor) != 0) {
    throw std::invalid_argument("subpixel filters must produce a multiple of factor channels");
  }
  return PeriodicShuffle(SameConv(x, filters), factor);
}

}  // namespace upart::layers
