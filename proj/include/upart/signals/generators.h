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

#ifndef UPART_SIGNALS_GENERATORS_H_
#define UPART_SIGNALS_GENERATORS_H_

#include <cstddef>
#include <cstdint>

#include "upart/signals/signal.h"

namespace upart::signals {

// Mono uniform noise in [-1, 1) drawn from Xoshiro256(seed).
Signal WhiteNoise(std::size_t n, int sample_rate_hz, std::uint64_t seed);

Signal Ones(std::size_t n, int sample_rate_hz);

// amplitude * sin(2*pi*f0*k/fs). Requires 0 < f0 < fs/2.
Signal Tone(std::size_t n, int sample_rate_hz, double f0_hz, double amplitude);

}  // namespace upart::signals

#endif  // UPART_SIGNALS_GENERATORS_H_
