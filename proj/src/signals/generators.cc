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

#include "upart/signals/generators.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "upart/signals/random.h"

namespace upart::signals {
namespace {

void RequireSamples(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sample count must be positive");
}

}  // namespace

Signal WhiteNoise(std::size_t n, int sample_rate_hz, std::uint64_t seed) {
  RequireSamples(n);
  Xoshiro256 rng(seed);
  std::vector<double> x(n);
  for (auto& v : x) v = rng.Uniform(-1.0, 1.0);
  return Signal::Mono(std::move(x), sample_rate_hz);
}

Signal Ones(std::size_t n, int sample_rate_hz) {
  RequireSamples(n);
  return Signal::Mono(std::vector<double>(n, 1.0), sample_rate_hz);
}

Signal Tone(std::size_t n, int sample_rate_hz, double f0_hz, double amplitude) {
  RequireSamples(n);
  if (!(f0_hz > 0.0) || !(f0_hz < sample_rate_hz / 2.0)) {
    throw std::invalid_argument("tone frequency must lie in (0, fs/2)");
  }
  std::vector<double> x(n);
  const double w = 2.0 * std::numbers::pi * f0_hz / sample_rate_hz;
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = amplitude * std::sin(w * static_cast<double>(k));
  }
  return Signal::Mono(std::move(x), sample_rate_hz);
}

}  // namespace upart::signals
