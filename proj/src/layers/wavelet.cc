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

#include "upart/layers/wavelet.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace upart::layers {
namespace {

std::vector<double> PadToMultiple(std::span<const double> x, std::size_t multiple) {
  std::vector<double> v(x.begin(), x.end());
  v.resize((x.size() + multiple - 1) / multiple * multiple, 0.0);
  return v;
}

// sum_j taps[j] * u[n - (first + j)], zero outside u.
double FilterSample(std::span<const double> u, const Fir& h, long n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < h.taps.size(); ++j) {
    const long idx = n - (h.first_index + static_cast<long>(j));
    if (idx >= 0 && idx < static_cast<long>(u.size())) {
      acc += h.taps[j] * u[static_cast<std::size_t>(idx)];
    }
  }
  return acc;
}

void CheckBands(const WaveletBands& bands) {
  if (bands.coarse.size() != bands.detail.size()) {
    throw std::invalid_argument("coarse and detail bands must have equal length");
  }
  if (bands.original_length > 2 * bands.coarse.size() ||
      bands.original_length + 1 < 2 * bands.coarse.size()) {
    throw std::invalid_argument("band length inconsistent with the original length");
  }
}

std::vector<double> Trim(std::vector<double> y, std::size_t n) {
  y.resize(n);
  return y;
}

}  // namespace

Fir Fir::TimeReversed() const {
  Fir r;
  r.taps.assign(taps.rbegin(), taps.rend());
  r.first_index = -(first_index + static_cast<int>(taps.size()) - 1);
  return r;
}

std::complex<double> Fir::Response(double omega) const {
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < taps.size(); ++j) {
    acc += taps[j] * std::polar(1.0, -omega * (first_index + static_cast<double>(j)));
  }
  return acc;
}

WaveletFilters HaarFilters() {
  const double s = 1.0 / std::sqrt(2.0);
  WaveletFilters f;
  f.analysis_low = {{s, s}, 0};
  f.analysis_high = {{s, -s}, 0};
  f.synthesis_low = f.analysis_low.TimeReversed();
  f.synthesis_high = f.analysis_high.TimeReversed();
  return f;
}

WaveletBands FilterBankAnalysis(std::span<const double> x, const WaveletFilters& filters) {
  const auto v = PadToMultiple(x, 2);
  const std::size_t half = v.size() / 2;
  WaveletBands b;
  b.coarse.resize(half);
  b.detail.resize(half);
  b.original_length = x.size();
  for (std::size_t k = 0; k < half; ++k) {
    const long n = 2 * static_cast<long>(k) + 1;
    b.coarse[k] = FilterSample(v, filters.analysis_low, n);
    b.detail[k] = FilterSample(v, filters.analysis_high, n);
  }
  return b;
}

std::vector<double> FilterBankSynthesis(const WaveletBands& bands, const WaveletFilters& filters) {
  CheckBands(bands);
  const auto up_c = std::vector<double>(bands.coarse.size() * 2, 0.0);
  std::vector<double> uc = up_c, ud = up_c;
  for (std::size_t k = 0; k < bands.coarse.size(); ++k) {
    uc[2 * k + 1] = bands.coarse[k];
    ud[2 * k + 1] = bands.detail[k];
  }
  std::vector<double> y(uc.size());
  for (std::size_t n = 0; n < y.size(); ++n) {
    const long t = static_cast<long>(n);
    y[n] = FilterSample(uc, filters.synthesis_low, t) + FilterSample(ud, filters.synthesis_high, t);
  }
  return Trim(std::move(y), bands.original_length);
}

WaveletBands HaarAnalysis(std::span<const double> x) {
  return FilterBankAnalysis(x, HaarFilters());
}

std::vector<double> HaarSynthesis(const WaveletBands& bands) {
  return FilterBankSynthesis(bands, HaarFilters());
}

WaveletBands LazyAnalysis(std::span<const double> x) {
  const auto v = PadToMultiple(x, 2);
  WaveletBands b;
  b.original_length = x.size();
  b.coarse.reserve(v.size() / 2);
  b.detail.reserve(v.size() / 2);
  for (std::size_t k = 0; k < v.size() / 2; ++k) {
    b.coarse.push_back(v[2 * k]);
    b.detail.push_back(v[2 * k + 1]);
  }
  return b;
}

std::vector<double> LazySynthesis(const WaveletBands& bands) {
  CheckBands(bands);
  std::vector<double> y(bands.coarse.size() * 2);
  for (std::size_t k = 0; k < bands.coarse.size(); ++k) {
    y[2 * k] = bands.coarse[k];
    y[2 * k + 1] = bands.detail[k];
  }
  return Trim(std::move(y), bands.original_length);
}

WaveletBands LiftingAnalysis(std::span<const double> x, const LiftingParams& params) {
  params.Validate();
  const auto v = PadToMultiple(x, 2);
  const double p = params.predict, u = params.update, a = params.normalize;
  WaveletBands b;
  b.original_length = x.size();
  b.coarse.resize(v.size() / 2);
  b.detail.resize(v.size() / 2);
  for (std::size_t k = 0; k < b.coarse.size(); ++k) {
    const double e = v[2 * k];
    const double o = v[2 * k + 1];
    const double d = o - p * e;
    const double c = e + u * d;
    b.coarse[k] = a * c;
    b.detail[k] = d / a;
  }
  return b;
}

std::vector<double> LiftingSynthesis(const WaveletBands& bands, const LiftingParams& params) {
  params.Validate();
  CheckBands(bands);
  const double p = params.predict, u = params.update, a = params.normalize;
  std::vector<double> y(bands.coarse.size() * 2);
  for (std::size_t k = 0; k < bands.coarse.size(); ++k) {
    const double d = a * bands.detail[k];
    const double c = bands.coarse[k] / a;
    const double e = c - u * d;
    const double o = d + p * e;
    y[2 * k] = e;
    y[2 * k + 1] = o;
  }
  return Trim(std::move(y), bands.original_length);
}

LiftingGradients LiftingParamGradients(std::span<const double> x, const LiftingParams& params) {
  params.Validate();
  const auto v = PadToMultiple(x, 2);
  const double p = params.predict, u = params.update, a = params.normalize;
  const std::size_t half = v.size() / 2;
  LiftingGradients g;
  for (auto* vec : {&g.coarse_d_predict, &g.coarse_d_update, &g.coarse_d_normalize,
                    &g.detail_d_predict, &g.detail_d_update, &g.detail_d_normalize}) {
    vec->assign(half, 0.0);
  }
  for (std::size_t k = 0; k < half; ++k) {
    const double e = v[2 * k];
    const double o = v[2 * k + 1];
    const double d = o - p * e;
    const double c = e + u * d;
    // dd/dP = -e, dc/dP = -U e, dc/dU = d, then scale by A (coarse) or 1/A
    // (detail).
    g.coarse_d_predict[k] = a * (-u * e);
    g.coarse_d_update[k] = a * d;
    g.coarse_d_normalize[k] = c;
    g.detail_d_predict[k] = -e / a;
    g.detail_d_update[k] = 0.0;
    g.detail_d_normalize[k] = -d / (a * a);
  }
  return g;
}

LiftingParamGrad LiftingBackward(std::span<const double> x, const LiftingParams& params,
                                 std::span<const double> grad_coarse,
                                 std::span<const double> grad_detail) {
  const auto g = LiftingParamGradients(x, params);
  if (grad_coarse.size() != g.coarse_d_predict.size() ||
      grad_detail.size() != g.detail_d_predict.size()) {
    throw std::invalid_argument("upstream gradient length does not match the bands");
  }
  LiftingParamGrad out;
  for (std::size_t k = 0; k < grad_coarse.size(); ++k) {
    out.predict += grad_coarse[k] * g.coarse_d_predict[k] + grad_detail[k] * g.detail_d_predict[k];
    out.update += grad_coarse[k] * g.coarse_d_update[k] + grad_detail[k] * g.detail_d_update[k];
    out.normalize +=
        grad_coarse[k] * g.coarse_d_normalize[k] + grad_detail[k] * g.detail_d_normalize[k];
  }
  return out;
}

WaveletBase WaveletBaseFor(const UpsamplerSpec& spec) {
  switch (spec.kind) {
    case LayerKind::kWaveletLazy: return {WaveletKind::kLazy, LiftingParams::Lazy()};
    case LayerKind::kWaveletHaar: return {WaveletKind::kHaar, LiftingParams::Haar()};
    case LayerKind::kWaveletLifting: return {WaveletKind::kLifting, spec.lifting};
    default:
      throw std::invalid_argument(std::string("layer ") + LayerKindName(spec.kind) +
                                  " is not a wavelet layer");
  }
}

WaveletBands WaveletAnalysis(std::span<const double> x, const WaveletBase& base) {
  switch (base.kind) {
    case WaveletKind::kLazy: return LazyAnalysis(x);
    case WaveletKind::kHaar: return HaarAnalysis(x);
    case WaveletKind::kLifting: return LiftingAnalysis(x, base.lifting);
  }
  throw std::invalid_argument("unknown wavelet kind");
}

std::vector<double> WaveletSynthesis(const WaveletBands& bands, const WaveletBase& base) {
  switch (base.kind) {
    case WaveletKind::kLazy: return LazySynthesis(bands);
    case WaveletKind::kHaar: return HaarSynthesis(bands);
    case WaveletKind::kLifting: return LiftingSynthesis(bands, base.lifting);
  }
  throw std::invalid_argument("unknown wavelet kind");
}

CascadeBands CascadeAnalysis(std::span<const double> x, const WaveletBase& base, int levels) {
  if (levels < 1) throw std::invalid_argument("cascade needs at least one level");
  CascadeBands out;
  out.original_length = x.size();
  std::vector<double> current = PadToMultiple(x, std::size_t{1} << levels);
  for (int level = 0; level < levels; ++level) {
    auto bands = WaveletAnalysis(current, base);
    out.details.push_back(std::move(bands.detail));
    current = std::move(bands.coarse);
  }
  out.coarse = std::move(current);
  return out;
}

std::vector<double> CascadeSynthesis(const CascadeBands& bands, const WaveletBase& base) {
  if (bands.details.empty()) throw std::invalid_argument("cascade has no detail bands");
  std::vector<double> current = bands.coarse;
  for (auto it = bands.details.rbegin(); it != bands.details.rend(); ++it) {
    WaveletBands level{std::move(current), *it, 2 * it->size()};
    current = WaveletSynthesis(level, base);
  }
  if (bands.original_length > current.size()) {
    throw std::invalid_argument("cascade original length exceeds the reconstructed length");
  }
  current.resize(bands.original_length);
  return current;
}

}  // namespace upart::layers
