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

#ifndef UPART_LAYERS_APPLY_H_
#define UPART_LAYERS_APPLY_H_

#include <span>
#include <vector>

#include "upart/layers/upsampler_spec.h"
#include "upart/signals/signal.h"

namespace upart::layers {

// Runs the configured layer on one channel.
//  - interpolators: stretch + fixed kernel, factor * K samples
//  - transposed: RandomFilters(spec) with stride factor, (K-1)*S + L samples
//  - subpixel: RandomFilters(spec) same-conv + shuffle, factor * K samples
//  - wavelets: the synthesis path with the input as the deepest coarse band
//    and all detail bands zero, factor * K samples
std::vector<double> UpsampleChannel(std::span<const double> x, const UpsamplerSpec& spec);

// Applies the layer to every channel with the same weights. The output rate
// is factor * input rate.
signals::Signal Upsample(const signals::Signal& x, const UpsamplerSpec& spec);

// Wavelet analysis followed by synthesis at the same rate (identity up to
// rounding). Wavelet kinds only.
signals::Signal WaveletRoundTrip(const signals::Signal& x, const UpsamplerSpec& spec);

}  // namespace upart::layers

#endif  // UPART_LAYERS_APPLY_H_
