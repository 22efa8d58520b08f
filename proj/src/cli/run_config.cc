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

#include "upart/cli/run_config.h"

#include <string>

namespace upart::cli {

Json SpecToJson(const layers::UpsamplerSpec& spec) {
  Json j;
  j["layer"] = layers::LayerKindName(spec.kind);
  j["factor"] = spec.factor;
  j["length"] = spec.filter_length;
  j["stride"] = spec.EffectiveStride();
  j["sinc_taps"] = spec.EffectiveSincTaps();
  j["P"] = spec.lifting.predict;
  j["U"] = spec.lifting.update;
  j["A"] = spec.lifting.normalize;
  j["seed"] = spec.seed;
  return j;
}

layers::UpsamplerSpec SpecFromJson(const Json& json) {
  layers::UpsamplerSpec spec;
  spec.kind = layers::ParseLayerKind(json.at("layer").get<std::string>());
  spec.factor = json.value("factor", spec.factor);
  spec.filter_length = json.value("length", spec.filter_length);
  spec.stride = json.value("stride", spec.stride);
  spec.sinc_taps = json.value("sinc_taps", spec.sinc_taps);
  spec.lifting.predict = json.value("P", spec.lifting.predict);
  spec.lifting.update = json.value("U", spec.lifting.update);
  spec.lifting.normalize = json.value("A", spec.lifting.normalize);
  spec.seed = json.value("seed", spec.seed);
  return spec;
}

}  // namespace upart::cli
