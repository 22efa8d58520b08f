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

#ifndef UPART_CLI_COMMANDS_H_
#define UPART_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "upart/analysis/artifacts.h"
#include "upart/analysis/spectral.h"
#include "upart/cli/run_config.h"
#include "upart/layers/upsampler_spec.h"
#include "upart/signals/wav.h"

namespace upart::cli {

struct GenerateArgs {
  std::string kind = "noise";  // noise | ones | tone
  std::size_t n = 32768;
  int fs = 8000;
  std::uint64_t seed = 0;
  double f0 = 1000.0;
  double amplitude = 1.0;
  std::string out;
  signals::WavFormat format = signals::WavFormat::kFloat32;
};

// Each runner returns the JSON echo of the fully resolved configuration.
// `clipped` receives the number of PCM16 samples clipped on write, if any.
Json RunGenerate(const GenerateArgs& args, std::size_t* clipped = nullptr);

struct UpsampleArgs {
  std::string in;
  std::string out;
  layers::UpsamplerSpec spec;
  bool roundtrip = false;
  signals::WavFormat format = signals::WavFormat::kFloat32;
};

Json RunUpsample(const UpsampleArgs& args, std::size_t* clipped = nullptr);

struct AnalyzeArgs {
  std::string in;
  std::size_t stft_size = 512;
  std::size_t hop = 128;
  analysis::WindowKind window = analysis::WindowKind::kHann;
  std::optional<double> fs_in;
  std::optional<int> factor;
  std::string spec_path;  // JSON echo of an upsample run; supplies the factor
  analysis::TonalOptions tonal;
  double filtering_threshold_db = 3.0;
  std::string report;
  std::string csv;
  std::string pgm;
};

Json RunAnalyze(const AnalyzeArgs& args);

}  // namespace upart::cli

#endif  // UPART_CLI_COMMANDS_H_
