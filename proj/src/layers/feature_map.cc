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

#include "upart/layers/feature_map.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace upart::layers {

FeatureMap::FeatureMap(std::vector<std::vector<double>> data, double sample_rate_hz)
    : data_(std::move(data)), sample_rate_hz_(sample_rate_hz) {
  if (data_.empty()) throw std::invalid_argument("feature map needs at least one channel");
  if (!(sample_rate_hz_ > 0.0) || !std::isfinite(sample_rate_hz_)) {
    throw std::invalid_argument("feature map sample rate must be positive");
  }
  const std::size_t n = data_.front().size();
  for (const auto& ch : data_) {
    if (ch.size() != n) throw std::invalid_argument("feature map must be rectangular");
    for (double v : ch) {
      if (!std::isfinite(v)) throw std::invalid_argument("feature map values must be finite");
    }
  }
}

FeatureMap::FeatureMap(const signals::Signal& signal)
    : FeatureMap(signal.planar(), static_cast<double>(signal.sample_rate_hz())) {}

signals::Signal FeatureMap::ToSignal() const {
  const double rounded = std::round(sample_rate_hz_);
  if (rounded != sample_rate_hz_) {
    throw std::invalid_argument("feature map rate is not an integral sample rate");
  }
  return signals::Signal(data_, static_cast<int>(rounded));
}

}  // namespace upart::layers
