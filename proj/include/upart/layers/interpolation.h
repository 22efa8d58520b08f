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

#ifndef UPART_LAYERS_INTERPOLATION_H_
#define UPART_LAYERS_INTERPOLATION_H_

#include <span>
#include <vector>

#include "upart/layers/upsampler_spec.h"
#include "upart/signals/signal.h"

namespace upart::layers {

// Fixed interpolation kernel applied after zero insertion. Output sample n is
//   y[n] = sum_i s[n + delay - i] * taps[i]
// where s is the stretched input, so `delay` selects which tap lines up with
// each original sample.
struct InterpolationFilter {
  std::vector<double> taps;
  int delay = 0;
};

// Kernels for the four interpolators. All have DC gain `factor`, so constant
// inputs stay constant away from the boundaries.
InterpolationFilter ImpulseFilter();
InterpolationFilter RectangularFilter(int factor);
InterpolationFilter TriangularFilter(int factor);
// Hann-windowed sinc with cutoff pi/factor. Every polyphase branch is scaled
// to sum to one, which fixes the DC gain at `factor` and puts exact zeros at
// multiples of the input sampling rate.
InterpolationFilter SincFilter(int factor, int taps);
InterpolationFilter FilterFor(const UpsamplerSpec& spec);

// Zero insertion: y[k*factor + phase] = x[k], zeros elsewhere.
std::vector<double> Stretch(std::span<const double> x, int factor, int phase = 0);

// Stretch followed by `filter`, cropped to factor * x.size() samples. Zero
// padding outside the input.
std::vector<double> Interpolate(std::span<const double> x, int factor,
                                const InterpolationFilter& filter);

std::vector<double> NearestNeighbor(std::span<const double> x, int factor);
std::vector<double> LinearInterpolate(std::span<const double> x, int factor);
std::vector<double> SincInterpolate(std::span<const double> x, int factor, int taps);

// Channel-wise versions; the output rate is factor * input rate.
signals::Signal Stretch(const signals::Signal& x, int factor);
signals::Signal NearestNeighbor(const signals::Signal& x, int factor);
signals::Signal LinearInterpolate(const signals::Signal& x, int factor);
signals::Signal SincInterpolate(const signals::Signal& x, int factor, int taps);

}  // namespace upart::layers

#endif  // UPART_LAYERS_INTERPOLATION_H_
