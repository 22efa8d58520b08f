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

#include "upart/signals/signal.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace upart::signals {

Signal::Signal(std::vector<std::vector<double>> channels, int sample_rate_hz)
    : channels_(std::move(channels)), sample_rate_hz_(sample_rate_hz) {
  if (sample_rate_hz_ <= 0) {
    throw std::invalid_argument("sample rate must be positive, got " +
                                std::to_string(sample_rate_hz_));
  }
  if (channels_.empty()) {
    throw std::invalid_argument("signal needs at least one channel");
  }
  const std::size_t n = channels_.front().size();
  for (const auto& ch : channels_) {
    if (ch.size() != n) {
      throw std::invalid_argument("all channels must have equal length");
    }
    for (double v : ch) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("signal samples must be finite");
      }
    }
  }
}

Signal Signal::Mono(std::vector<double> samples, int sample_rate_hz) {
  std::vector<std::vector<double>> channels;
  channels.push_back(std::move(samples));
  return Signal(std::move(channels), sample_rate_hz);
}

Signal Signal::WithSampleRate(int sample_rate_hz) const {
  return Signal(channels_, sample_rate_hz);
}

}  // namespace upart::signals
