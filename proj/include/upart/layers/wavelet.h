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

#ifndef UPART_LAYERS_WAVELET_H_
#define UPART_LAYERS_WAVELET_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "upart/layers/upsampler_spec.h"

namespace upart::layers {

// FIR filter whose first coefficient sits at time index `first_index`, so
// anti-causal filters such as L_a[-n] can be represented directly.
struct Fir {
  std::vector<double> taps;
  int first_index = 0;

  // h[n] -> h[-n].
  Fir TimeReversed() const;
  // H(e^{jw}) = sum_n h[n] e^{-jwn}.
  std::complex<double> Response(double omega) const;
};

// Two-channel filter bank: low/high analysis and synthesis filters.
struct WaveletFilters {
  Fir analysis_low;
  Fir analysis_high;
  Fir synthesis_low;
  Fir synthesis_high;
};

// L_a = [1, 1]/sqrt2, H_a = [1, -1]/sqrt2, L_s[n] = L_a[-n], H_s[n] = H_a[-n].
WaveletFilters HaarFilters();

// Output of one analysis stage. `original_length` is the input length before
// zero padding to an even count; synthesis trims back to it.
struct WaveletBands {
  std::vector<double> coarse;
  std::vector<double> detail;
  std::size_t original_length = 0;

  bool padded() const { return 2 * coarse.size() != original_length; }
};

// Convolve with the analysis filters and keep the odd-indexed outputs
// (n = 2k + 1), which pairs x[2k] with x[2k+1] for two-tap causal filters.
WaveletBands FilterBankAnalysis(std::span<const double> x, const WaveletFilters& filters);
// Stretch each band onto the odd phase, convolve with the synthesis filters
// and sum.
std::vector<double> FilterBankSynthesis(const WaveletBands& bands, const WaveletFilters& filters);

WaveletBands HaarAnalysis(std::span<const double> x);
std::vector<double> HaarSynthesis(const WaveletBands& bands);

// Even/odd split without filtering.
WaveletBands LazyAnalysis(std::span<const double> x);
std::vector<double> LazySynthesis(const WaveletBands& bands);

// split e = x[2k], o = x[2k+1]; d = o - P e; c = e + U d;
// coarse = A c, detail = d / A.
WaveletBands LiftingAnalysis(std::span<const double> x, const LiftingParams& params);
std::vector<double> LiftingSynthesis(const WaveletBands& bands, const LiftingParams& params);

// Elementwise partial derivatives of the lifting outputs with respect to the
// parameters.
struct LiftingGradients {
  std::vector<double> coarse_d_predict;
  std::vector<double> coarse_d_update;
  std::vector<double> coarse_d_normalize;
  std::vector<double> detail_d_predict;
  std::vector<double> detail_d_update;
  std::vector<double> detail_d_normalize;
};

LiftingGradients LiftingParamGradients(std::span<const double> x, const LiftingParams& params);

struct LiftingParamGrad {
  double predict = 0.0;
  double update = 0.0;
  double normalize = 0.0;
};

// Vector-Jacobian product: gradient of a scalar loss with respect to (P, U, A)
// given dLoss/dcoarse and dLoss/ddetail.
LiftingParamGrad LiftingBackward(std::span<const double> x, const LiftingParams& params,
                                 std::span<const double> grad_coarse,
                                 std::span<const double> grad_detail);

enum class WaveletKind { kLazy, kHaar, kLifting };

struct WaveletBase {
  WaveletKind kind = WaveletKind::kHaar;
  LiftingParams lifting;  // used by kLifting only
};

WaveletBase WaveletBaseFor(const UpsamplerSpec& spec);
WaveletBands WaveletAnalysis(std::span<const double> x, const WaveletBase& base);
std::vector<double> WaveletSynthesis(const WaveletBands& bands, const WaveletBase& base);

// Multi-level decomposition: each level re-analyses the previous coarse band.
// details[0] is the finest (first) level.
struct CascadeBands {
  std::vector<double> coarse;
  std::vector<std::vector<double>> details;
  std::size_t original_length = 0;
};

// Inputs whose length is not a multiple of 2^levels are zero padded first.
CascadeBands CascadeAnalysis(std::span<const double> x, const WaveletBase& base, int levels);
std::vector<double> CascadeSynthesis(const CascadeBands& bands, const WaveletBase& base);

}  // namespace upart::layers

#endif  // UPART_LAYERS_WAVELET_H_
