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

#ifndef UPART_SIGNALS_RANDOM_H_
#define UPART_SIGNALS_RANDOM_H_

#include <array>
#include <cstdint>

namespace upart::signals {

// xoshiro256** seeded through splitmix64. This generator backs every seeded
// quantity in the project (noise, random filters, test inputs); changing it
// changes every seeded output, so the algorithm is versioned.
class Xoshiro256 {
 public:
  static constexpr int kAlgorithmVersion = 1;

  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t Next();

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform01();

  // Uniform in [lo, hi).
  double Uniform(double lo, double hi);

 private:
  std::array<std::uint64_t, 4> state_;
};

// Derives an independent stream seed from a base seed and a stream index.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream);

}  // namespace upart::signals

#endif  // UPART_SIGNALS_RANDOM_H_
