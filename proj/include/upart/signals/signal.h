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

#ifndef UPART_SIGNALS_SIGNAL_H_
#define UPART_SIGNALS_SIGNAL_H_

#include <cstddef>
#include <span>
#include <vector>

namespace upart::signals {

// A sampled waveform with one or more channels stored planar, in double
// precision. Instances are validated on construction and immutable afterwards:
// every channel has the same length, the rate is positive and all samples are
// finite.
class Signal {
 public:
  Signal(std::vector<std::vector<double>> channels, int sample_rate_hz);

  static Signal Mono(std::vector<double> samples, int sample_rate_hz);

  int sample_rate_hz() const { return sample_rate_hz_; }
  std::size_t channels() const { return channels_.size(); }
  std::size_t frames() const { return channels_.front().size(); }

  std::span<const double> channel(std::size_t c) const { return channels_.at(c); }
  const std::vector<std::vector<double>>& planar() const { return channels_; }

  // Same samples relabelled with a different rate.
  Signal WithSampleRate(int sample_rate_hz) const;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<std::vector<double>> channels_;
  int sample_rate_hz_;
};

}  // namespace upart::signals

#endif  // UPART_SIGNALS_SIGNAL_H_
