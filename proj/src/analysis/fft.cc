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

#include "upart/analysis/fft.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace upart::analysis {

bool IsPowerOfTwo(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

ComplexFft::ComplexFft(std::size_t size) : size_(size) {
  if (!IsPowerOfTwo(size_)) throw std::invalid_argument("FFT size must be a power of two");
  bit_reverse_.resize(size_);
  int bits = 0;
  while ((std::size_t{1} << bits) < size_) ++bits;
  for (std::size_t i = 0; i < size_; ++i) {
    std::size_t r = 0;
    for (int b = 0; b < bits; ++b) {
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
    }
    bit_reverse_[i] = r;
  }
  twiddles_.resize(size_ / 2);
  for (std::size_t k = 0; k < size_ / 2; ++k) {
    twiddles_[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                       static_cast<double>(size_));
  }
}

void ComplexFft::Forward(std::span<std::complex<double>> data) const {
  if (data.size() != size_) throw std::invalid_argument("FFT input has the wrong size");
  for (std::size_t i = 0; i < size_; ++i) {
    if (i < bit_reverse_[i]) std::swap(data[i], data[bit_reverse_[i]]);
  }
  for (std::size_t len = 2; len <= size_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = size_ / len;
    for (std::size_t start = 0; start < size_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const auto t = twiddles_[j * step] * data[start + j + half];
        data[start + j + half] = data[start + j] - t;
        data[start + j] += t;
      }
    }
  }
}

RealFft::RealFft(std::size_t size)
    : size_(size), half_(size >= 2 ? size / 2 : 1) {
  if (size_ < 2 || !IsPowerOfTwo(size_)) {
    throw std::invalid_argument("real FFT size must be a power of two >= 2");
  }
  split_twiddles_.resize(size_ / 2 + 1);
  for (std::size_t k = 0; k <= size_ / 2; ++k) {
    split_twiddles_[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) /
                                             static_cast<double>(size_));
  }
}

void RealFft::Forward(std::span<const double> in, std::span<std::complex<double>> out) const {
  if (in.size() != size_ || out.size() != bins()) {
    throw std::invalid_argument("real FFT buffers have the wrong size");
  }
  const std::size_t h = size_ / 2;
  std::vector<std::complex<double>> z(h);
  for (std::size_t k = 0; k < h; ++k) z[k] = {in[2 * k], in[2 * k + 1]};
  half_.Forward(z);
  // Untangle the even/odd half-length spectra.
  for (std::size_t k = 0; k <= h; ++k) {
    const auto zk = z[k % h];
    const auto zr = std::conj(z[(h - k) % h]);
    const auto even = 0.5 * (zk + zr);
    const auto odd = std::complex<double>(0.0, -0.5) * (zk - zr);
    out[k] = even + split_twiddles_[k] * odd;
  }
}

std::vector<std::complex<double>> RealFft::Forward(std::span<const double> in) const {
  std::vector<std::complex<double>> out(bins());
  Forward(in, out);
  return out;
}

}  // namespace upart::analysis
