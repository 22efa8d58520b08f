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

#include "upart/analysis/spectral.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "upart/analysis/fft.h"

namespace upart::analysis {
namespace {

void CheckFraming(std::size_t n, std::size_t window_size, std::size_t hop) {
  if (!IsPowerOfTwo(window_size) || window_size < 2) {
    throw std::invalid_argument("window size must be a power of two >= 2");
  }
  if (hop == 0 || hop > window_size) {
    throw std::invalid_argument("hop must be in [1, window size]");
  }
  if (window_size > n) {
    throw std::invalid_argument("window of " + std::to_string(window_size) +
                                " samples is longer than the signal (" + std::to_string(n) +
                                ")");
  }
}

std::size_t FrameCount(std::size_t n, std::size_t window_size, std::size_t hop) {
  return n < window_size ? 0 : 1 + (n - window_size) / hop;
}

}  // namespace

double MagnitudeToDb(double magnitude) {
  if (!(magnitude > 0.0)) return kDbFloor;
  return std::max(kDbFloor, 20.0 * std::log10(magnitude));
}

WindowKind ParseWindowKind(const std::string& name) {
  if (name == "hann") return WindowKind::kHann;
  if (name == "rect") return WindowKind::kRect;
  throw std::invalid_argument("unknown window '" + name + "' (hann|rect)");
}

const char* WindowKindName(WindowKind kind) {
  return kind == WindowKind::kHann ? "hann" : "rect";
}

std::vector<double> MakeWindow(WindowKind kind, std::size_t size) {
  std::vector<double> w(size, 1.0);
  if (kind == WindowKind::kHann) {
    for (std::size_t n = 0; n < size; ++n) {
      w[n] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(n) /
                                  static_cast<double>(size));
    }
  }
  return w;
}

double Spectrogram::BinFrequency(std::size_t bin) const {
  return static_cast<double>(bin) * sample_rate_hz / static_cast<double>(window_size);
}

Spectrogram ComputeSpectrogram(std::span<const double> x, double sample_rate_hz,
                               std::size_t window_size, std::size_t hop, WindowKind window) {
  CheckFraming(x.size(), window_size, hop);
  const RealFft fft(window_size);
  const auto w = MakeWindow(window, window_size);
  Spectrogram s;
  s.sample_rate_hz = sample_rate_hz;
  s.window_size = window_size;
  s.hop = hop;
  s.window = window;

  std::vector<double> frame(window_size);
  std::vector<std::complex<double>> bins(fft.bins());
  const std::size_t frames = FrameCount(x.size(), window_size, hop);
  s.magnitudes_db.reserve(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t i = 0; i < window_size; ++i) frame[i] = x[f * hop + i] * w[i];
    fft.Forward(frame, bins);
    std::vector<double> row(bins.size());
    for (std::size_t k = 0; k < bins.size(); ++k) row[k] = MagnitudeToDb(std::abs(bins[k]));
    s.magnitudes_db.push_back(std::move(row));
  }
  return s;
}

Spectrogram ComputeSpectrogram(const signals::Signal& x, std::size_t window_size,
                               std::size_t hop, WindowKind window) {
  return ComputeSpectrogram(Mixdown(x), x.sample_rate_hz(), window_size, hop, window);
}

double ParsevalEnergy(const Spectrogram& spectrogram) {
  const std::size_t n = spectrogram.window_size;
  double total = 0.0;
  for (const auto& row : spectrogram.magnitudes_db) {
    double frame = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const double mag = std::pow(10.0, row[k] / 20.0);
      const double weight = (k == 0 || k == n / 2) ? 1.0 : 2.0;
      frame += weight * mag * mag;
    }
    total += frame / static_cast<double>(n);
  }
  return total;
}

double WindowedEnergy(std::span<const double> x, std::size_t window_size, std::size_t hop,
                      WindowKind window) {
  CheckFraming(x.size(), window_size, hop);
  const auto w = MakeWindow(window, window_size);
  double total = 0.0;
  const std::size_t frames = FrameCount(x.size(), window_size, hop);
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t i = 0; i < window_size; ++i) {
      const double v = x[f * hop + i] * w[i];
      total += v * v;
    }
  }
  return total;
}

std::size_t Spectrum::BinFor(double freq_hz) const {
  if (magnitude_db.empty()) throw std::logic_error("empty spectrum");
  const double bin = std::round(freq_hz * static_cast<double>(window_size) / sample_rate_hz);
  return static_cast<std::size_t>(std::clamp(bin, 0.0, static_cast<double>(bins() - 1)));
}

WelchAccumulator::WelchAccumulator(double sample_rate_hz, std::size_t window_size)
    : sample_rate_hz_(sample_rate_hz),
      window_size_(window_size),
      window_(MakeWindow(WindowKind::kHann, window_size)),
      magnitude_sum_(window_size / 2 + 1, 0.0),
      power_sum_(window_size / 2 + 1, 0.0) {
  if (!IsPowerOfTwo(window_size) || window_size < 2) {
    throw std::invalid_argument("window size must be a power of two >= 2");
  }
}

void WelchAccumulator::Add(std::span<const double> x) {
  const std::size_t hop = window_size_ / 2;
  const RealFft fft(window_size_);
  std::vector<double> frame(window_size_);
  std::vector<std::complex<double>> bins(fft.bins());
  const std::size_t frames = FrameCount(x.size(), window_size_, hop);
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t i = 0; i < window_size_; ++i) frame[i] = x[f * hop + i] * window_[i];
    fft.Forward(frame, bins);
    for (std::size_t k = 0; k < bins.size(); ++k) {
      const double p = std::norm(bins[k]);
      power_sum_[k] += p;
      magnitude_sum_[k] += std::sqrt(p);
    }
  }
  frames_ += frames;
}

Spectrum WelchAccumulator::MeanMagnitude() const {
  if (frames_ == 0) throw std::invalid_argument("no frames accumulated");
  Spectrum s;
  s.sample_rate_hz = sample_rate_hz_;
  s.window_size = window_size_;
  s.frames = frames_;
  s.freqs_hz.resize(magnitude_sum_.size());
  s.magnitude_db.resize(magnitude_sum_.size());
  for (std::size_t k = 0; k < magnitude_sum_.size(); ++k) {
    s.freqs_hz[k] = static_cast<double>(k) * sample_rate_hz_ / static_cast<double>(window_size_);
    s.magnitude_db[k] = MagnitudeToDb(magnitude_sum_[k] / static_cast<double>(frames_));
  }
  return s;
}

std::vector<double> WelchAccumulator::MeanPower() const {
  if (frames_ == 0) throw std::invalid_argument("no frames accumulated");
  std::vector<double> p(power_sum_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = power_sum_[k] / static_cast<double>(frames_);
  return p;
}

Spectrum AverageSpectrum(std::span<const double> x, double sample_rate_hz,
                         std::size_t window_size) {
  if (!IsPowerOfTwo(window_size) || window_size < 2) {
    throw std::invalid_argument("window size must be a power of two >= 2");
  }
  const std::size_t frames = FrameCount(x.size(), window_size, window_size / 2);
  if (frames < kMinAverageFrames) {
    throw std::invalid_argument("signal too short: " + std::to_string(frames) +
                                " frames, need at least " + std::to_string(kMinAverageFrames));
  }
  WelchAccumulator acc(sample_rate_hz, window_size);
  acc.Add(x);
  return acc.MeanMagnitude();
}

Spectrum AverageSpectrum(const signals::Signal& x, std::size_t window_size) {
  return AverageSpectrum(Mixdown(x), x.sample_rate_hz(), window_size);
}

std::vector<double> Mixdown(const signals::Signal& x) {
  if (x.channels() == 1) {
    const auto c = x.channel(0);
    return {c.begin(), c.end()};
  }
  std::vector<double> m(x.frames(), 0.0);
  for (std::size_t c = 0; c < x.channels(); ++c) {
    const auto ch = x.channel(c);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += ch[i];
  }
  for (auto& v : m) v /= static_cast<double>(x.channels());
  return m;
}

}  // namespace upart::analysis
