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

#ifndef UPART_LAYERS_FEATURE_MAP_H_
#define UPART_LAYERS_FEATURE_MAP_H_

#include <cstddef>
#include <span>
#include <vector>

#include "upart/signals/signal.h"

namespace upart::layers {

// channels x time matrix of finite reals, the intermediate representation for
// the learnable (transposed / subpixel) layers.
class FeatureMap {
 public:
  FeatureMap(std::vector<std::vector<double>> data, double sample_rate_hz);
  explicit FeatureMap(const signals::Signal& signal);

  std::size_t channels() const { return data_.size(); }
  std::size_t length() const { return data_.front().size(); }
  double sample_rate_hz() const { return sample_rate_hz_; }

  std::span<const double> channel(std::size_t c) const { return data_.at(c); }
  const std::vector<std::vector<double>>& data() const { return data_; }

  // Requires an integral sample rate.
  signals::Signal ToSignal() const;

  friend bool operator==(const FeatureMap&, const FeatureMap&) = default;

 private:
  std::vector<std::vector<double>> data_;
  double sample_rate_hz_;
};

}  // namespace upart::layers

#endif  // UPART_LAYERS_FEATURE_MAP_H_
