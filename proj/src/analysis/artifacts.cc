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

#include "upart/analysis/artifacts.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace upart::analysis {
namespace {

double Median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<long>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<long>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

std::vector<double> ReplicaFrequencies(double fs_in, int factor) {
  if (factor < 2) throw std::invalid_argument("upsampling factor must be >= 2");
  if (!(fs_in > 0.0)) throw std::invalid_argument("input sample rate must be positive");
  std::vector<double> f;
  for (int k = 1; k <= factor / 2; ++k) f.push_back(k * fs_in);
  return f;
}

std::vector<TonalPeak> DetectTonalPeaks(const Spectrum& spectrum,
                                        std::span<const double> candidate_freqs,
                                        const TonalOptions& options) {
  if (options.neighborhood_bins <= options.exclude_bins || options.exclude_bins < 0) {
    throw std::invalid_argument("neighborhood must extend beyond the excluded core");
  }
  const double nyquist = spectrum.sample_rate_hz / 2.0;
  const long last = static_cast<long>(spectrum.bins()) - 1;
  std::vector<TonalPeak> peaks;
  for (double f : candidate_freqs) {
    if (f < 0.0 || f > nyquist * (1.0 + 1e-12)) {
      throw std::invalid_argument("tonal candidate " + std::to_string(f) +
                                  " Hz lies outside [0, fs/2]");
    }
    const std::size_t bin = spectrum.BinFor(f);
    const long b = static_cast<long>(bin);
    std::vector<double> background;
    for (long i = std::max(0L, b - options.neighborhood_bins);
         i <= std::min(last, b + options.neighborhood_bins); ++i) {
      if (std::abs(i - b) > options.exclude_bins) {
        background.push_back(spectrum.magnitude_db[static_cast<std::size_t>(i)]);
      }
    }
    if (background.empty()) throw std::invalid_argument("spectrum too short for tonal detection");
    TonalPeak p;
    p.freq_hz = f;
    p.bin = bin;
    p.prominence_db = spectrum.magnitude_db[bin] - Median(std::move(background));
    p.detected = p.prominence_db > options.threshold_db;
    peaks.push_back(p);
  }
  return peaks;
}

std::vector<double> BandAttenuation(const Spectrum& spectrum, double fs_in, int factor) {
  if (factor < 1) throw std::invalid_argument("factor must be positive");
  if (!(fs_in > 0.0)) throw std::invalid_argument("input sample rate must be positive");
  if (spectrum.sample_rate_hz < factor * fs_in * (1.0 - 1e-9)) {
    throw std::invalid_argument("spectrum does not span factor * fs_in / 2");
  }
  const double width = fs_in / 2.0;
  std::vector<double> sum(static_cast<std::size_t>(factor), 0.0);
  std::vector<std::size_t> count(static_cast<std::size_t>(factor), 0);
  for (std::size_t k = 0; k < spectrum.bins(); ++k) {
    const double f = spectrum.freqs_hz[k];
    auto band = static_cast<long>(std::floor(f / width));
    if (band == factor && std::abs(f - factor * width) < 1e-9 * width) band = factor - 1;
    if (band < 0 || band >= factor) continue;
    sum[static_cast<std::size_t>(band)] += spectrum.magnitude_db[k];
    ++count[static_cast<std::size_t>(band)];
  }
  std::vector<double> out(static_cast<std::size_t>(factor));
  for (std::size_t b = 0; b < out.size(); ++b) {
    if (count[b] == 0) throw std::invalid_argument("band " + std::to_string(b) + " has no bins");
    out[b] = sum[b] / static_cast<double>(count[b]);
  }
  const double ref = out.front();
  for (auto& v : out) v -= ref;
  return out;
}

ArtifactReport AnalyzeArtifacts(const Spectrum& spectrum, double fs_in, int factor,
                                const TonalOptions& options, double filtering_threshold_db) {
  ArtifactReport r;
  r.predicted_replicas = ReplicaFrequencies(fs_in, factor);
  r.candidates = DetectTonalPeaks(spectrum, r.predicted_replicas, options);
  for (const auto& p : r.candidates) {
    if (p.detected) r.tonal_peaks.push_back(p);
  }
  r.band_attenuation_db = BandAttenuation(spectrum, fs_in, factor);
  r.filtering_threshold_db = filtering_threshold_db;
  r.tonal_detected = !r.tonal_peaks.empty();
  r.filtering_detected =
      std::any_of(r.band_attenuation_db.begin() + 1, r.band_attenuation_db.end(),
                  [&](double v) { return v < -filtering_threshold_db; });
  return r;
}

}  // namespace upart::analysis
