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

#include "upart/cli/commands.h"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "upart/cli/export.h"
#include "upart/layers/apply.h"
#include "upart/signals/generators.h"

namespace upart::cli {
namespace {

signals::Signal Generate(const GenerateArgs& args) {
  if (args.kind == "noise") return signals::WhiteNoise(args.n, args.fs, args.seed);
  if (args.kind == "ones") return signals::Ones(args.n, args.fs);
  if (args.kind == "tone") return signals::Tone(args.n, args.fs, args.f0, args.amplitude);
  throw UsageError("unknown signal kind '" + args.kind + "' (noise|ones|tone)");
}

Json PeakToJson(const analysis::TonalPeak& p) {
  Json j;
  j["freq_hz"] = p.freq_hz;
  j["bin"] = p.bin;
  j["prominence_db"] = p.prominence_db;
  j["detected"] = p.detected;
  return j;
}

Json ReportToJson(const analysis::ArtifactReport& r) {
  Json j;
  j["predicted_replicas_hz"] = r.predicted_replicas;
  Json candidates = Json::array();
  for (const auto& p : r.candidates) candidates.push_back(PeakToJson(p));
  j["candidates"] = std::move(candidates);
  Json peaks = Json::array();
  for (const auto& p : r.tonal_peaks) peaks.push_back(PeakToJson(p));
  j["tonal_peaks"] = std::move(peaks);
  j["band_attenuation_db"] = r.band_attenuation_db;
  j["filtering_threshold_db"] = r.filtering_threshold_db;
  j["tonal_detected"] = r.tonal_detected;
  j["filtering_detected"] = r.filtering_detected;
  return j;
}

layers::UpsamplerSpec ReadSpecFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  if (j.contains("spec")) j = j.at("spec");
  return SpecFromJson(j);
}

}  // namespace

Json RunGenerate(const GenerateArgs& args, std::size_t* clipped) {
  if (args.out.empty()) throw UsageError("--out is required");
  const signals::Signal signal = Generate(args);
  const auto stats = signals::WriteWav(args.out, signal, args.format);
  if (clipped != nullptr) *clipped = stats.clipped_samples;
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "generate";
  j["kind"] = args.kind;
  j["n"] = args.n;
  j["fs"] = args.fs;
  j["seed"] = args.seed;
  if (args.kind == "tone") {
    j["f0"] = args.f0;
    j["amplitude"] = args.amplitude;
  }
  j["format"] = signals::WavFormatName(args.format);
  j["out"] = args.out;
  return j;
}

Json RunUpsample(const UpsampleArgs& args, std::size_t* clipped) {
  if (args.in.empty() || args.out.empty()) throw UsageError("--in and --out are required");
  try {
    args.spec.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.roundtrip && !layers::IsWavelet(args.spec.kind)) {
    throw UsageError("--roundtrip applies to wavelet layers only");
  }
  const signals::Signal input = signals::ReadWav(args.in);
  const signals::Signal output = args.roundtrip ? layers::WaveletRoundTrip(input, args.spec)
                                                : layers::Upsample(input, args.spec);
  const auto stats = signals::WriteWav(args.out, output, args.format);
  if (clipped != nullptr) *clipped = stats.clipped_samples;
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "upsample";
  j["spec"] = SpecToJson(args.spec);
  j["roundtrip"] = args.roundtrip;
  j["in"] = args.in;
  j["out"] = args.out;
  j["format"] = signals::WavFormatName(args.format);
  j["input_sample_rate_hz"] = input.sample_rate_hz();
  j["output_sample_rate_hz"] = output.sample_rate_hz();
  j["output_frames"] = output.frames();
  return j;
}

Json RunAnalyze(const AnalyzeArgs& args) {
  if (args.in.empty()) throw UsageError("--in is required");
  const signals::Signal input = signals::ReadWav(args.in);
  const double fs = input.sample_rate_hz();

  std::optional<int> factor = args.factor;
  std::optional<double> fs_in = args.fs_in;
  Json spec_json;
  if (!args.spec_path.empty()) {
    const auto spec = ReadSpecFile(args.spec_path);
    spec_json = SpecToJson(spec);
    const int spec_factor =
        spec.kind == layers::LayerKind::kTransposed ? spec.EffectiveStride() : spec.factor;
    if (factor && *factor != spec_factor) throw UsageError("--factor disagrees with --spec");
    factor = spec_factor;
    if (!fs_in) fs_in = fs / spec_factor;
  }
  if (fs_in.has_value() != factor.has_value()) {
    throw UsageError("replica prediction needs both --fs-in and --factor");
  }
  if (factor) {
    if (*factor < 1) throw UsageError("--factor must be positive");
    if (!(*fs_in > 0.0)) throw UsageError("--fs-in must be positive");
    if (std::abs(*fs_in * *factor - fs) > 1e-6 * fs) {
      throw UsageError("--fs-in x --factor does not match the input sample rate");
    }
  }

  analysis::Spectrogram spectrogram;
  analysis::Spectrum spectrum;
  try {
    spectrogram = analysis::ComputeSpectrogram(input, args.stft_size, args.hop, args.window);
    if (factor) spectrum = analysis::AverageSpectrum(input, args.stft_size);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "analyze";
  Json config;
  config["in"] = args.in;
  config["stft_size"] = args.stft_size;
  config["hop"] = args.hop;
  config["window"] = analysis::WindowKindName(args.window);
  config["fs_in"] = fs_in ? Json(*fs_in) : Json(nullptr);
  config["factor"] = factor ? Json(*factor) : Json(nullptr);
  config["spec"] = spec_json;
  config["neighborhood_bins"] = args.tonal.neighborhood_bins;
  config["exclude_bins"] = args.tonal.exclude_bins;
  config["tonal_threshold_db"] = args.tonal.threshold_db;
  config["filtering_threshold_db"] = args.filtering_threshold_db;
  config["csv"] = args.csv;
  config["pgm"] = args.pgm;
  j["config"] = std::move(config);

  Json meta;
  meta["sample_rate_hz"] = input.sample_rate_hz();
  meta["channels"] = input.channels();
  meta["frames"] = input.frames();
  j["input"] = std::move(meta);

  Json sg;
  sg["frames"] = spectrogram.frames();
  sg["bins"] = spectrogram.bins();
  sg["bin_hz"] = spectrogram.BinFrequency(1);
  j["spectrogram"] = std::move(sg);

  if (factor) {
    const auto report = analysis::AnalyzeArtifacts(spectrum, *fs_in, *factor, args.tonal,
                                                   args.filtering_threshold_db);
    j["artifacts"] = ReportToJson(report);
  } else {
    j["artifacts"] = nullptr;
  }

  if (!args.csv.empty()) WriteTextFile(args.csv, SpectrogramToCsv(spectrogram));
  if (!args.pgm.empty()) WriteBinaryFile(args.pgm, SpectrogramToPgm(spectrogram));
  if (!args.report.empty()) WriteTextFile(args.report, j.dump(2) + "\n");
  return j;
}

}  // namespace upart::cli
