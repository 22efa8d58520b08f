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

#include <cstdio>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "upart/cli/commands.h"
#include "upart/cli/verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void WarnClipped(std::size_t clipped) {
  if (clipped > 0) {
    std::cerr << "warning: " << clipped << " sample(s) clipped to [-1, 1] in pcm16 output\n";
  }
}

void AddSpecOptions(CLI::App* app, upart::layers::UpsamplerSpec& spec, std::string& layer) {
  app->add_option("--layer", layer, "stretch|sinc|linear|nearest|transposed|subpixel|"
                                    "wavelet-lazy|wavelet-haar|wavelet-lifting")
      ->required();
  app->add_option("--factor", spec.factor, "upsampling factor M")->capture_default_str();
  app->add_option("--length", spec.filter_length, "convolution filter length L")
      ->capture_default_str();
  app->add_option("--stride", spec.stride, "transposed-convolution stride (default: factor)");
  app->add_option("--taps", spec.sinc_taps, "windowed-sinc taps (default: 8*factor+1)");
  app->add_option("--seed", spec.seed, "weight initialization seed")->capture_default_str();
  app->add_option("--P", spec.lifting.predict, "lifting prediction")->capture_default_str();
  app->add_option("--U", spec.lifting.update, "lifting update")->capture_default_str();
  app->add_option("--A", spec.lifting.normalize, "lifting normalization")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace upart;
  CLI::App app{"upart: audio upsampling layers and artifact analysis"};
  app.require_subcommand(1);

  cli::GenerateArgs gen;
  std::string gen_format = "float32";
  auto* generate = app.add_subcommand("generate", "write a test signal as WAV");
  generate->add_option("--kind", gen.kind, "noise|ones|tone")->capture_default_str();
  generate->add_option("--n", gen.n, "number of samples")->capture_default_str();
  generate->add_option("--fs", gen.fs, "sample rate in Hz")->capture_default_str();
  generate->add_option("--seed", gen.seed, "noise seed")->capture_default_str();
  generate->add_option("--f0", gen.f0, "tone frequency in Hz")->capture_default_str();
  generate->add_option("--amplitude", gen.amplitude, "tone amplitude")->capture_default_str();
  generate->add_option("--out", gen.out, "output WAV path")->required();
  generate->add_option("--format", gen_format, "float32|pcm16")->capture_default_str();

  cli::UpsampleArgs up;
  std::string up_layer;
  std::string up_format = "float32";
  auto* upsample = app.add_subcommand("upsample", "apply an upsampling layer to a WAV file");
  upsample->add_option("--in", up.in, "input WAV path")->required();
  upsample->add_option("--out", up.out, "output WAV path")->required();
  AddSpecOptions(upsample, up.spec, up_layer);
  upsample->add_flag("--roundtrip", up.roundtrip,
                     "wavelet layers: analysis followed by synthesis at the input rate");
  upsample->add_option("--format", up_format, "float32|pcm16")->capture_default_str();

  cli::AnalyzeArgs an;
  std::string an_window = "hann";
  double fs_in = 0.0;
  int factor = 0;
  auto* analyze = app.add_subcommand("analyze", "spectrogram export and artifact report");
  analyze->add_option("--in", an.in, "input WAV path")->required();
  analyze->add_option("--stft-size", an.stft_size, "STFT window size")->capture_default_str();
  analyze->add_option("--hop", an.hop, "STFT hop size")->capture_default_str();
  analyze->add_option("--window", an_window, "hann|rect")->capture_default_str();
  auto* fs_in_opt = analyze->add_option("--fs-in", fs_in, "sample rate before upsampling");
  auto* factor_opt = analyze->add_option("--factor", factor, "upsampling factor");
  analyze->add_option("--spec", an.spec_path, "JSON echo of an upsample run");
  analyze->add_option("--neighborhood", an.tonal.neighborhood_bins,
                      "tonal background half-width in bins")
      ->capture_default_str();
  analyze->add_option("--exclude", an.tonal.exclude_bins, "bins excluded around a candidate")
      ->capture_default_str();
  analyze->add_option("--tonal-threshold", an.tonal.threshold_db, "prominence threshold in dB")
      ->capture_default_str();
  analyze->add_option("--filtering-threshold", an.filtering_threshold_db,
                      "band attenuation threshold in dB")
      ->capture_default_str();
  analyze->add_option("--report", an.report, "JSON report path");
  analyze->add_option("--csv", an.csv, "spectrogram CSV path");
  analyze->add_option("--pgm", an.pgm, "spectrogram PGM path");

  std::string suite_name = "all";
  auto* verify = app.add_subcommand("verify", "run built-in invariant suites");
  verify->add_option("--suite", suite_name, "pr|response|tonal|grads|all")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) gen.format = signals::ParseWavFormat(gen_format);
    if (*upsample) {
      up.spec.kind = layers::ParseLayerKind(up_layer);
      up.format = signals::ParseWavFormat(up_format);
    }
    if (*analyze) an.window = analysis::ParseWindowKind(an_window);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*generate) {
      std::size_t clipped = 0;
      std::cout << cli::RunGenerate(gen, &clipped).dump() << "\n";
      WarnClipped(clipped);
    } else if (*upsample) {
      std::size_t clipped = 0;
      std::cout << cli::RunUpsample(up, &clipped).dump() << "\n";
      WarnClipped(clipped);
    } else if (*analyze) {
      if (*fs_in_opt) an.fs_in = fs_in;
      if (*factor_opt) an.factor = factor;
      std::cout << cli::RunAnalyze(an).dump() << "\n";
    } else if (*verify) {
      const auto result = cli::RunVerifySuite(cli::ParseSuite(suite_name));
      for (const auto& check : result.checks) std::cerr << cli::FormatCheckLine(check) << "\n";
      std::fprintf(stderr, "%s: %s (%zu checks, %.2f s)\n", result.suite.c_str(),
                   result.pass() ? "PASS" : "FAIL", result.checks.size(), result.seconds);
      std::cout << cli::SuiteToJson(result).dump(2) << "\n";
      return result.pass() ? kExitOk : kExitFailure;
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
