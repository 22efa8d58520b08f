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

#ifndef UPART_ANALYSIS_FFT_H_
#define UPART_ANALYSIS_FFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace upart::analysis {

bool IsPowerOfTwo(std::size_t n);

// Iterative radix-2 decimation-in-time FFT with precomputed twiddles and
// bit-reversal table. Unnormalized forward transform, X[k] = sum x[n] e^{-2 pi i kn/N}.
class ComplexFft {
 public:
  explicit ComplexFft(std::size_t size);

  std::size_t size() const { return size_; }
  void Forward(std::span<std::complex<double>> data) const;

 private:
  std::size_t size_;
  std::vector<std::size_t> bit_reverse_;
  std::vector<std::complex<double>> twiddles_;
};

// Real-input transform of even power-of-two size N via one complex FFT of
// size N/2. Produces the N/2 + 1 non-negative frequency bins. Const methods
// are safe to call concurrently.
class RealFft {
 public:
  explicit RealFft(std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t bins() const { return size_ / 2 + 1; }

  void Forward(std::span<const double> in, std::span<std::complex<double>> out) const;
  std::vector<std::complex<double>> Forward(std::span<const double> in) const;

 private:
  std::size_t size_;
  ComplexFft half_;
  std::vector<std::complex<double>> split_twiddles_;
};

}  // namespace upart::analysis

#endif  // UPART_ANALYSIS_FFT_H_
