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

#ifndef UPART_CLI_RUN_CONFIG_H_
#define UPART_CLI_RUN_CONFIG_H_

#include <stdexcept>

#include "json.hpp"
#include "upart/layers/upsampler_spec.h"

namespace upart::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

// Bad flag combinations; the CLI maps these to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Flat object: layer, factor, length, stride, sinc_taps, P, U, A, seed. Stride
// and sinc_taps are written in resolved form.
Json SpecToJson(const layers::UpsamplerSpec& spec);
layers::UpsamplerSpec SpecFromJson(const Json& json);

}  // namespace upart::cli

#endif  // UPART_CLI_RUN_CONFIG_H_
