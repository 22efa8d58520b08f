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

#ifndef UPART_ANALYSIS_ARTIFACTS_H_
#define UPART_ANALYSIS_ARTIFACTS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "upart/analysis/spectral.h"

namespace upart::analysis {

// In-band images of DC after upsampling a signal sampled at fs_in by `factor`:
// k * fs_in for k = 1 .. floor(factor / 2), i.e. every multiple up to and
// including the output Nyquist.
std::vector<double> ReplicaFrequencies(double fs_in, int factor);

struct TonalOptions {
  int neighborhood_bins = 50;
  int exclude_bins = 3;
  double threshold_db = 6.0;
};

struct TonalPeak {
  double freq_hz = 0.0;
  std::size_t bin = 0;
  double prominence_db = 0.0;
  bool detected = false;
};

// Prominence of each candidate: level at its nearest bin minus the median
// level over +-neighborhood_bins, skipping the +-exclude_bins core. Every
// candidate is returned; `detected` marks prominence > threshold_db.
std::vector<TonalPeak> DetectTonalPeaks(const Spectrum& spectrum,
                                        std::span<const double> candidate_freqs,
                                        const TonalOptions& options = {});

// Mean level of each band [b fs_in/2, (b+1) fs_in/2), b < factor, relative to
// band 0. The last band also takes the Nyquist bin.
std::vector<double> BandAttenuation(const Spectrum& spectrum, double fs_in, int factor);

struct ArtifactReport {
  std::vector<TonalPeak> candidates;
  std::vector<TonalPeak> tonal_peaks;  // detected candidates only
  std::vector<double> band_attenuation_db;
  std::vector<double> predicted_replicas;
  double filtering_threshold_db = 3.0;
  bool tonal_detected = false;
  // Some band sits more than filtering_threshold_db below band 0.
  bool filtering_detected = false;
};

ArtifactReport AnalyzeArtifacts(const Spectrum& spectrum, double fs_in, int factor,
                                const TonalOptions& options = {},
                                double filtering_threshold_db = 3.0);

}  // namespace upart::analysis

#endif  // UPART_ANALYSIS_ARTIFACTS_H_
