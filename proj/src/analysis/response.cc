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

#include "upart/analysis/response.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <stdexcept>

#include "upart/analysis/spectral.h"
#include "upart/layers/apply.h"
#include "upart/signals/random.h"

namespace upart::analysis {
namespace {

std::vector<double> Noise(std::size_t n, std::uint64_t seed) {
  signals::Xoshiro256 rng(seed);
  std::vector<double> x(n);
  for (auto& v : x) v = rng.Uniform(-1.0, 1.0);
  return x;
}

std::vector<double> WaveletPathOutput(const layers::UpsamplerSpec& spec, std::size_t n,
                                      std::uint64_t seed) {
  const int levels = spec.WaveletLevels();
  layers::CascadeBands bands;
  bands.coarse = Noise(n, signals::DeriveSeed(seed, 0));
  for (int level = levels - 1; level >= 0; --level) {
    bands.details.push_back(
        Noise(n << level, signals::DeriveSeed(seed, static_cast<std::uint64_t>(level) + 1)));
  }
  bands.original_length = n << levels;
  return layers::CascadeSynthesis(bands, layers::WaveletBaseFor(spec));
}

}  // namespace

FrequencyResponse MeasureResponse(const layers::UpsamplerSpec& spec, double fs_in,
                                  const ResponseOptions& options) {
  spec.Validate();
  if (options.realizations < 1) throw std::invalid_argument("need at least one realization");
  const int rate_factor =
      spec.kind == layers::LayerKind::kTransposed ? spec.EffectiveStride() : spec.factor;
  const double fs_out = fs_in * rate_factor;
  WelchAccumulator acc(fs_out, options.window_size);
  for (int r = 0; r < options.realizations; ++r) {
    const std::uint64_t seed = signals::DeriveSeed(options.seed, static_cast<std::uint64_t>(r));
    if (layers::IsWavelet(spec.kind)) {
      acc.Add(WaveletPathOutput(spec, options.input_length, seed));
    } else {
      acc.Add(layers::UpsampleChannel(Noise(options.input_length, seed), spec));
    }
  }
  const auto power = acc.MeanPower();
  if (!(power.front() > 0.0)) throw std::runtime_error("layer output has no DC power");
  FrequencyResponse out;
  out.sample_rate_hz = fs_out;
  out.freqs_hz.resize(power.size());
  out.magnitude_db.resize(power.size());
  for (std::size_t k = 0; k < power.size(); ++k) {
    out.freqs_hz[k] = static_cast<double>(k) * fs_out / static_cast<double>(options.window_size);
    out.magnitude_db[k] = 10.0 * std::log10(std::max(power[k] / power.front(), 1e-30));
  }
  return out;
}

FrequencyResponse FilterResponse(std::span<const double> taps, double sample_rate_hz,
                                 std::span<const double> freqs_hz) {
  double dc = 0.0;
  for (double t : taps) dc += t;
  if (dc == 0.0) throw std::invalid_argument("filter has zero DC gain");
  FrequencyResponse out;
  out.sample_rate_hz = sample_rate_hz;
  out.freqs_hz.assign(freqs_hz.begin(), freqs_hz.end());
  for (double f : freqs_hz) {
    const double w = 2.0 * std::numbers::pi * f / sample_rate_hz;
    std::complex<double> h = 0.0;
    for (std::size_t n = 0; n < taps.size(); ++n) {
      h += taps[n] * std::polar(1.0, -w * static_cast<double>(n));
    }
    out.magnitude_db.push_back(20.0 * std::log10(std::max(std::abs(h) / std::abs(dc), 1e-15)));
  }
  return out;
}

std::vector<std::size_t> NullBins(std::span<const double> magnitude_db) {
  std::vector<std::size_t> nulls;
  const std::size_t n = magnitude_db.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool below_left = i == 0 || magnitude_db[i] < magnitude_db[i - 1];
    const bool below_right = i + 1 == n || magnitude_db[i] < magnitude_db[i + 1];
    if (below_left && below_right && n > 1) nulls.push_back(i);
  }
  return nulls;
}

double ResponseDeviation(const FrequencyResponse& measured, const FrequencyResponse& reference,
                         int exclude_bins) {
  if (measured.magnitude_db.size() != reference.magnitude_db.size()) {
    throw std::invalid_argument("responses are on different grids");
  }
  std::set<long> excluded;
  for (std::size_t b : NullBins(reference.magnitude_db)) {
    for (long d = -exclude_bins; d <= exclude_bins; ++d) excluded.insert(static_cast<long>(b) + d);
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < measured.magnitude_db.size(); ++k) {
    if (excluded.contains(static_cast<long>(k))) continue;
    worst = std::max(worst, std::abs(measured.magnitude_db[k] - reference.magnitude_db[k]));
  }
  return worst;
}

double PerfectReconstructionError(const layers::WaveletBase& base, int levels,
                                  std::span<const double> x) {
  const auto y = layers::CascadeSynthesis(layers::CascadeAnalysis(x, base, levels), base);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(y[i] - x[i]));
  return worst;
}

}  // namespace upart::analysis
