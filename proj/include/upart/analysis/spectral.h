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

#ifndef UPART_ANALYSIS_SPECTRAL_H_
#define UPART_ANALYSIS_SPECTRAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "upart/signals/signal.h"

namespace upart::analysis {

inline constexpr double kDbFloor = -120.0;

// 20 log10(magnitude), floored at kDbFloor.
double MagnitudeToDb(double magnitude);

enum class WindowKind { kHann, kRect };

WindowKind ParseWindowKind(const std::string& name);
const char* WindowKindName(WindowKind kind);

// Periodic Hann (0.5 - 0.5 cos(2 pi n / N)) or all ones.
std::vector<double> MakeWindow(WindowKind kind, std::size_t size);

// Magnitude STFT in dB. Only frames that lie entirely inside the signal are
// used: frame f covers [f * hop, f * hop + window_size).
struct Spectrogram {
  std::vector<std::vector<double>> magnitudes_db;  // frames x bins
  double sample_rate_hz = 0.0;
  std::size_t window_size = 0;
  std::size_t hop = 0;
  WindowKind window = WindowKind::kHann;

  std::size_t frames() const { return magnitudes_db.size(); }
  std::size_t bins() const { return window_size / 2 + 1; }
  double BinFrequency(std::size_t bin) const;
};

Spectrogram ComputeSpectrogram(std::span<const double> x, double sample_rate_hz,
                               std::size_t window_size, std::size_t hop, WindowKind window);
// Multi-channel signals are mixed down to their channel mean first.
Spectrogram ComputeSpectrogram(const signals::Signal& x, std::size_t window_size,
                               std::size_t hop, WindowKind window);

// Total energy implied by the spectrogram via Parseval on each frame
// (one-sided bins, DC and Nyquist counted once). Equals WindowedEnergy up to
// the dB floor and rounding.
double ParsevalEnergy(const Spectrogram& spectrogram);
double WindowedEnergy(std::span<const double> x, std::size_t window_size, std::size_t hop,
                      WindowKind window);

// One-sided spectrum on the FFT bin grid.
struct Spectrum {
  std::vector<double> freqs_hz;
  std::vector<double> magnitude_db;
  double sample_rate_hz = 0.0;
  std::size_t window_size = 0;
  std::size_t frames = 0;

  std::size_t bins() const { return magnitude_db.size(); }
  // Nearest bin to `freq_hz`.
  std::size_t BinFor(double freq_hz) const;
};

// Accumulates Hann-windowed, 50%-overlapped frames from one or more signals.
class WelchAccumulator {
 public:
  WelchAccumulator(double sample_rate_hz, std::size_t window_size);

  void Add(std::span<const double> x);

  std::size_t frames() const { return frames_; }
  // Mean of per-frame magnitudes, in dB.
  Spectrum MeanMagnitude() const;
  // Mean of per-frame squared magnitudes (linear).
  std::vector<double> MeanPower() const;

 private:
  double sample_rate_hz_;
  std::size_t window_size_;
  std::vector<double> window_;
  std::vector<double> magnitude_sum_;
  std::vector<double> power_sum_;
  std::size_t frames_ = 0;
};

inline constexpr std::size_t kMinAverageFrames = 16;

// Welch-style average magnitude spectrum: Hann window, hop window_size / 2,
// mean of per-frame magnitudes over at least kMinAverageFrames frames.
Spectrum AverageSpectrum(std::span<const double> x, double sample_rate_hz,
                         std::size_t window_size);
Spectrum AverageSpectrum(const signals::Signal& x, std::size_t window_size);

// Channel mean of a signal.
std::vector<double> Mixdown(const signals::Signal& x);

}  // namespace upart::analysis

#endif  // UPART_ANALYSIS_SPECTRAL_H_
