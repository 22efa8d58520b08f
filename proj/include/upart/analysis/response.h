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

#ifndef UPART_ANALYSIS_RESPONSE_H_
#define UPART_ANALYSIS_RESPONSE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "upart/layers/upsampler_spec.h"
#include "upart/layers/wavelet.h"

namespace upart::analysis {

// Gain per frequency in dB relative to DC; freqs ascending over [0, fs/2].
struct FrequencyResponse {
  std::vector<double> freqs_hz;
  std::vector<double> magnitude_db;
  double sample_rate_hz = 0.0;
};

struct ResponseOptions {
  int realizations = 32;
  std::size_t input_length = std::size_t{1} << 15;
  std::size_t window_size = 512;
  std::uint64_t seed = 0;
};

// Drives the layer with independent uniform white noise realizations and
// averages the output power spectrum (Hann, 50% overlap), normalized to 0 dB
// at DC. Wavelet layers are measured on their full synthesis path: the
// coarse band and every detail band receive independent noise. Realization r
// uses DeriveSeed(options.seed, r); results do not depend on anything else.
FrequencyResponse MeasureResponse(const layers::UpsamplerSpec& spec, double fs_in,
                                  const ResponseOptions& options = {});

// |H(e^{jw})| / |H(1)| in dB for an FIR evaluated at `freqs_hz` (sample rate
// `sample_rate_hz`), by direct summation.
FrequencyResponse FilterResponse(std::span<const double> taps, double sample_rate_hz,
                                 std::span<const double> freqs_hz);

// Bins that are strict local minima of a response (edges compare against one
// neighbour).
std::vector<std::size_t> NullBins(std::span<const double> magnitude_db);

// max |measured - reference| in dB, ignoring +-exclude_bins around each null
// of the reference.
double ResponseDeviation(const FrequencyResponse& measured, const FrequencyResponse& reference,
                         int exclude_bins = 2);

// max |synthesis(analysis(x)) - x| through a cascade of `levels`.
double PerfectReconstructionError(const layers::WaveletBase& base, int levels,
                                  std::span<const double> x);

}  // namespace upart::analysis

#endif  // UPART_ANALYSIS_RESPONSE_H_
