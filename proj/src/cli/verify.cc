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

#include "upart/cli/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "upart/analysis/artifacts.h"
#include "upart/analysis/response.h"
#include "upart/analysis/spectral.h"
#include "upart/cli/export.h"
#include "upart/layers/apply.h"
#include "upart/layers/convolution.h"
#include "upart/layers/interpolation.h"
#include "upart/layers/wavelet.h"
#include "upart/signals/generators.h"
#include "upart/signals/random.h"
#include "upart/signals/wav.h"

namespace upart::cli {
namespace {

using layers::LayerKind;
using layers::LiftingParams;
using layers::UpsamplerSpec;
using layers::WaveletBase;
using layers::WaveletKind;

constexpr int kFsIn = 8000;
constexpr int kFactor = 4;
constexpr std::size_t kWindow = 512;

class Checks {
 public:
  void Add(std::string name, double measured, Comparison cmp, double threshold) {
    CheckResult c{std::move(name), measured, threshold, cmp, false};
    switch (cmp) {
      case Comparison::kLess: c.pass = measured < threshold; break;
      case Comparison::kLessEqual: c.pass = measured <= threshold; break;
      case Comparison::kGreaterEqual: c.pass = measured >= threshold; break;
      case Comparison::kGreater: c.pass = measured > threshold; break;
    }
    results_.push_back(std::move(c));
  }
  std::vector<CheckResult> Take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::vector<double> RandomVector(signals::Xoshiro256& rng, std::size_t n) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng.Uniform(-1.0, 1.0);
  return x;
}

LiftingParams RandomLifting(signals::Xoshiro256& rng) {
  LiftingParams p;
  p.predict = rng.Uniform(-2.0, 2.0);
  p.update = rng.Uniform(-2.0, 2.0);
  const double mag = rng.Uniform(0.1, 3.0);
  p.normalize = rng.Uniform01() < 0.5 ? -mag : mag;
  return p;
}

double MaxAbsDiff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

UpsamplerSpec Spec(LayerKind kind, int filter_length = 9, std::uint64_t seed = 0) {
  UpsamplerSpec s;
  s.kind = kind;
  s.factor = kFactor;
  s.filter_length = filter_length;
  s.seed = seed;
  return s;
}

analysis::Spectrum SpectrumOf(const std::vector<double>& y, double fs) {
  return analysis::AverageSpectrum(y, fs, kWindow);
}

// ---------------------------------------------------------------- pr

void RunPr(Checks& checks) {
  signals::Xoshiro256 rng(20240601);
  std::vector<std::vector<double>> inputs;
  for (int i = 0; i < 50; ++i) inputs.push_back(RandomVector(rng, 1024));
  std::vector<LiftingParams> triples;
  for (int i = 0; i < 20; ++i) triples.push_back(RandomLifting(rng));

  for (int levels : {1, 2}) {
    const std::string suffix = ".levels" + std::to_string(levels);
    double lazy = 0.0, haar = 0.0, lifting = 0.0;
    for (const auto& x : inputs) {
      lazy = std::max(lazy, analysis::PerfectReconstructionError({WaveletKind::kLazy, {}}, levels, x));
      haar = std::max(haar, analysis::PerfectReconstructionError({WaveletKind::kHaar, {}}, levels, x));
      for (const auto& p : triples) {
        lifting = std::max(lifting,
                           analysis::PerfectReconstructionError({WaveletKind::kLifting, p}, levels, x));
      }
    }
    checks.Add("pr.lazy" + suffix, lazy, Comparison::kLess, 1e-9);
    checks.Add("pr.haar" + suffix, haar, Comparison::kLess, 1e-9);
    checks.Add("pr.lifting-random" + suffix, lifting, Comparison::kLess, 1e-9);
  }

  const auto odd = RandomVector(rng, 1023);
  double odd_err = 0.0;
  for (const WaveletBase& base : {WaveletBase{WaveletKind::kLazy, {}}, WaveletBase{WaveletKind::kHaar, {}},
                                  WaveletBase{WaveletKind::kLifting, triples.front()}}) {
    for (int levels : {1, 2}) {
      odd_err = std::max(odd_err, analysis::PerfectReconstructionError(base, levels, odd));
    }
  }
  checks.Add("pr.odd-length-padding", odd_err, Comparison::kLess, 1e-9);

  double coarse_dev = 0.0, detail_dev = 0.0;
  for (const auto& x : inputs) {
    const auto lift = layers::LiftingAnalysis(x, LiftingParams::Haar());
    const auto haar = layers::HaarAnalysis(x);
    coarse_dev = std::max(coarse_dev, MaxAbsDiff(lift.coarse, haar.coarse));
    double plus = 0.0, minus = 0.0;
    for (std::size_t k = 0; k < haar.detail.size(); ++k) {
      plus = std::max(plus, std::abs(lift.detail[k] - haar.detail[k]));
      minus = std::max(minus, std::abs(lift.detail[k] + haar.detail[k]));
    }
    detail_dev = std::max(detail_dev, std::min(plus, minus));
  }
  checks.Add("pr.lifting-haar.coarse", coarse_dev, Comparison::kLess, 1e-12);
  checks.Add("pr.lifting-haar.detail-up-to-sign", detail_dev, Comparison::kLess, 1e-12);
}

// ---------------------------------------------------------------- response

void RunResponse(Checks& checks) {
  const auto haar = layers::HaarFilters();
  double complementarity = 0.0;
  for (int i = 0; i < 4096; ++i) {
    const double w = std::numbers::pi * i / 4095.0;
    const double sum = std::norm(haar.synthesis_low.Response(w)) +
                       std::norm(haar.synthesis_high.Response(w));
    complementarity = std::max(complementarity, std::abs(sum - 2.0));
  }
  checks.Add("response.haar.power-complementarity", complementarity, Comparison::kLess, 1e-9);

  auto flatness = [](const analysis::FrequencyResponse& r) {
    double worst = 0.0;
    for (double v : r.magnitude_db) worst = std::max(worst, std::abs(v));
    return worst;
  };
  for (int factor : {2, 4}) {
    UpsamplerSpec s = Spec(LayerKind::kWaveletHaar);
    s.factor = factor;
    checks.Add("response.haar-synthesis-x" + std::to_string(factor) + ".flatness-db",
               flatness(analysis::MeasureResponse(s, kFsIn)), Comparison::kLessEqual, 1.0);
  }
  checks.Add("response.stretch-x4.flatness-db",
             flatness(analysis::MeasureResponse(Spec(LayerKind::kStretch), kFsIn)),
             Comparison::kLessEqual, 1.0);

  // Band profile of stretched white noise, 32 realizations of 2^17 samples.
  analysis::WelchAccumulator stretch_acc(kFsIn * kFactor, kWindow);
  for (std::uint64_t r = 0; r < 32; ++r) {
    const auto x = signals::WhiteNoise(std::size_t{1} << 17, kFsIn, signals::DeriveSeed(7, r));
    stretch_acc.Add(layers::Stretch(x.channel(0), kFactor));
  }
  const auto stretch_bands = analysis::BandAttenuation(stretch_acc.MeanMagnitude(), kFsIn, kFactor);
  double stretch_dev = 0.0;
  for (double v : stretch_bands) stretch_dev = std::max(stretch_dev, std::abs(v));
  checks.Add("response.stretch-x4.band-deviation-db", stretch_dev, Comparison::kLessEqual, 1.0);

  struct Case { const char* name; LayerKind kind; int factor; };
  for (const Case c : {Case{"nearest-x2", LayerKind::kNearest, 2}, Case{"nearest-x4", LayerKind::kNearest, 4},
                       Case{"linear-x4", LayerKind::kLinear, 4}, Case{"sinc-x4", LayerKind::kSinc, 4}}) {
    UpsamplerSpec s = Spec(c.kind);
    s.factor = c.factor;
    const auto measured = analysis::MeasureResponse(s, kFsIn);
    const auto analytic = analysis::FilterResponse(layers::FilterFor(s).taps,
                                                   measured.sample_rate_hz, measured.freqs_hz);
    checks.Add(std::string("response.") + c.name + ".deviation-from-analytic-db",
               analysis::ResponseDeviation(measured, analytic, 2), Comparison::kLess, 1.0);
  }

  // Stopband of the designed sinc on a dense grid, then on measured noise.
  const auto sinc = layers::SincFilter(kFactor, 8 * kFactor + 1);
  std::vector<double> grid;
  for (int i = 0; i < 8192; ++i) grid.push_back(i * (kFsIn * kFactor / 2.0) / 8192.0);
  const auto dense = analysis::FilterResponse(sinc.taps, kFsIn * kFactor, grid);
  analysis::Spectrum dense_spectrum;
  dense_spectrum.freqs_hz = dense.freqs_hz;
  dense_spectrum.magnitude_db = dense.magnitude_db;
  dense_spectrum.sample_rate_hz = kFsIn * kFactor;
  dense_spectrum.window_size = 16384;
  const auto designed = analysis::BandAttenuation(dense_spectrum, kFsIn, kFactor);
  checks.Add("response.sinc-x4.designed-stopband-db",
             -*std::max_element(designed.begin() + 1, designed.end()), Comparison::kGreaterEqual,
             30.0);

  const auto noise = signals::WhiteNoise(std::size_t{1} << 17, kFsIn, 11);
  auto bands_of = [&](LayerKind kind) {
    const auto y = layers::UpsampleChannel(noise.channel(0), Spec(kind));
    return analysis::BandAttenuation(SpectrumOf(y, kFsIn * kFactor), kFsIn, kFactor);
  };
  const auto sinc_bands = bands_of(LayerKind::kSinc);
  checks.Add("response.sinc-x4.measured-stopband-db",
             -*std::max_element(sinc_bands.begin() + 1, sinc_bands.end()),
             Comparison::kGreaterEqual, 30.0);
  const auto nearest_bands = bands_of(LayerKind::kNearest);
  const auto linear_bands = bands_of(LayerKind::kLinear);
  checks.Add("response.band3.nearest-minus-linear-db", nearest_bands[3] - linear_bands[3],
             Comparison::kGreater, 0.0);
}

// ---------------------------------------------------------------- tonal

double MaxProminence(const std::vector<analysis::TonalPeak>& peaks) {
  double worst = -1e300;
  for (const auto& p : peaks) worst = std::max(worst, p.prominence_db);
  return worst;
}

void RunTonal(Checks& checks) {
  const auto ones = signals::Ones(32768, kFsIn);
  const auto replicas = analysis::ReplicaFrequencies(kFsIn, kFactor);

  auto peaks_for = [&](const UpsamplerSpec& spec) {
    const auto y = layers::UpsampleChannel(ones.channel(0), spec);
    return analysis::DetectTonalPeaks(SpectrumOf(y, kFsIn * kFactor), replicas);
  };

  const auto stretch = peaks_for(Spec(LayerKind::kStretch));
  for (const auto& p : stretch) {
    checks.Add("tonal.stretch-ones.prominence-db@" + std::to_string(static_cast<int>(p.freq_hz)),
               p.prominence_db, Comparison::kGreaterEqual, 40.0);
  }
  for (LayerKind kind : {LayerKind::kNearest, LayerKind::kLinear, LayerKind::kSinc}) {
    checks.Add(std::string("tonal.") + layers::LayerKindName(kind) + "-ones.max-prominence-db",
               MaxProminence(peaks_for(Spec(kind))), Comparison::kLessEqual, 6.0);
  }

  auto detections = [&](LayerKind kind, int length) {
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto peaks = peaks_for(Spec(kind, length, seed));
      if (peaks.front().detected) ++hits;
    }
    return hits;
  };
  for (int length : {4, 8, 9}) {
    checks.Add("tonal.transposed-L" + std::to_string(length) + "-S4.seeds-with-8k-peak",
               detections(LayerKind::kTransposed, length), Comparison::kGreaterEqual, 9);
  }
  checks.Add("tonal.subpixel-L9.seeds-with-8k-peak", detections(LayerKind::kSubpixel, 9),
             Comparison::kGreaterEqual, 9);

  // Imaging: a 1 kHz tone stretched x4 shows lines at 1, 7, 9 and 15 kHz.
  const auto tone = signals::Tone(32768, kFsIn, 1000.0, 1.0);
  const auto stretched = SpectrumOf(layers::Stretch(tone.channel(0), kFactor), kFsIn * kFactor);
  const std::vector<double> images = {1000.0, 7000.0, 9000.0, 15000.0};
  double worst_offset = 0.0;
  for (double f : images) {
    const std::size_t predicted = stretched.BinFor(f);
    std::size_t best = predicted;
    for (std::size_t k = predicted > 3 ? predicted - 3 : 0;
         k <= std::min(stretched.bins() - 1, predicted + 3); ++k) {
      if (stretched.magnitude_db[k] > stretched.magnitude_db[best]) best = k;
    }
    worst_offset = std::max(worst_offset, std::abs(static_cast<double>(best) - static_cast<double>(predicted)));
  }
  checks.Add("tonal.imaging.stretch.max-line-offset-bins", worst_offset, Comparison::kLessEqual, 1.0);

  const auto sinc = SpectrumOf(layers::UpsampleChannel(tone.channel(0), Spec(LayerKind::kSinc)),
                               kFsIn * kFactor);
  const double line = sinc.magnitude_db[sinc.BinFor(1000.0)];
  double suppression = 1e300;
  for (double f : {7000.0, 9000.0, 15000.0}) {
    suppression = std::min(suppression, line - sinc.magnitude_db[sinc.BinFor(f)]);
  }
  checks.Add("tonal.imaging.sinc.min-image-suppression-db", suppression, Comparison::kGreaterEqual,
             30.0);
}

// ---------------------------------------------------------------- grads

void RunGrads(Checks& checks) {
  signals::Xoshiro256 rng(99);
  constexpr double h = 1e-6;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = RandomVector(rng, 64);
    const LiftingParams p = RandomLifting(rng);
    const auto g = layers::LiftingParamGradients(x, p);
    auto perturbed = [&](int which, double delta) {
      LiftingParams q = p;
      (which == 0 ? q.predict : which == 1 ? q.update : q.normalize) += delta;
      return layers::LiftingAnalysis(x, q);
    };
    const std::vector<double>* analytic[3][2] = {
        {&g.coarse_d_predict, &g.detail_d_predict},
        {&g.coarse_d_update, &g.detail_d_update},
        {&g.coarse_d_normalize, &g.detail_d_normalize}};
    for (int which = 0; which < 3; ++which) {
      const auto plus = perturbed(which, h);
      const auto minus = perturbed(which, -h);
      for (int band = 0; band < 2; ++band) {
        const auto& hi = band == 0 ? plus.coarse : plus.detail;
        const auto& lo = band == 0 ? minus.coarse : minus.detail;
        const auto& an = *analytic[which][band];
        double diff = 0.0, scale = 0.0;
        for (std::size_t k = 0; k < an.size(); ++k) {
          const double fd = (hi[k] - lo[k]) / (2.0 * h);
          diff = std::max(diff, std::abs(fd - an[k]));
          scale = std::max({scale, std::abs(an[k]), std::abs(fd)});
        }
        if (scale > 0.0) worst = std::max(worst, diff / scale);
      }
    }
  }
  checks.Add("grads.lifting.max-relative-error-vs-central-fd", worst, Comparison::kLess, 1e-6);

  const std::vector<double> zeros(64, 0.0);
  const auto g = layers::LiftingParamGradients(zeros, RandomLifting(rng));
  double zero_mag = 0.0;
  for (const auto* v : {&g.coarse_d_predict, &g.coarse_d_update, &g.coarse_d_normalize,
                        &g.detail_d_predict, &g.detail_d_update, &g.detail_d_normalize}) {
    for (double d : *v) zero_mag = std::max(zero_mag, std::abs(d));
  }
  checks.Add("grads.zero-input.max-abs-partial", zero_mag, Comparison::kLessEqual, 0.0);
}

// ---------------------------------------------------------------- misc (all only)

void RunMisc(Checks& checks) {
  int mismatches = 0;
  for (int length = 1; length <= 32; ++length) {
    for (int stride = 1; stride <= 32; ++stride) {
      // Coverage count of stride-spaced kernel copies over one period.
      std::vector<int> cover(static_cast<std::size_t>(stride), 0);
      for (int i = 0; i < length; ++i) ++cover[static_cast<std::size_t>(i % stride)];
      const bool uniform = std::all_of(cover.begin(), cover.end(), [&](int c) { return c == cover[0]; });
      layers::Overlap expected = !uniform ? layers::Overlap::kPartial
                                 : cover[0] == 1 ? layers::Overlap::kNone
                                                 : layers::Overlap::kFull;
      if (layers::ClassifyOverlap(length, stride) != expected) ++mismatches;
    }
  }
  checks.Add("overlap.grid-1..32.mismatches", mismatches, Comparison::kLessEqual, 0);

  // Seeded layers reproduce bit-for-bit.
  const auto ones = signals::Ones(4096, kFsIn);
  int differing = 0;
  for (LayerKind kind : {LayerKind::kTransposed, LayerKind::kSubpixel}) {
    const auto a = signals::EncodeWav(layers::Upsample(ones, Spec(kind, 9, 3)), signals::WavFormat::kFloat32);
    const auto b = signals::EncodeWav(layers::Upsample(ones, Spec(kind, 9, 3)), signals::WavFormat::kFloat32);
    if (a != b) ++differing;
  }
  checks.Add("determinism.seeded-layers.differing-outputs", differing, Comparison::kLessEqual, 0);

  signals::Xoshiro256 rng(5);
  std::vector<std::vector<double>> z(8);
  for (auto& ch : z) ch = RandomVector(rng, 33);
  const layers::FeatureMap fm(z, 1000.0);
  const auto back = layers::PeriodicUnshuffle(layers::PeriodicShuffle(fm, 4), 4);
  double shuffle_err = 0.0;
  for (std::size_t c = 0; c < z.size(); ++c) shuffle_err = std::max(shuffle_err, MaxAbsDiff(back.channel(c), z[c]));
  checks.Add("roundtrip.shuffle.max-abs-error", shuffle_err, Comparison::kLessEqual, 0.0);

  std::vector<double> samples = RandomVector(rng, 1000);
  for (auto& v : samples) v = static_cast<float>(v);
  const auto sig = signals::Signal::Mono(samples, kFsIn);
  const auto decoded = signals::DecodeWav(signals::EncodeWav(sig, signals::WavFormat::kFloat32));
  checks.Add("roundtrip.wav-float32.max-abs-error", MaxAbsDiff(decoded.channel(0), samples),
             Comparison::kLessEqual, 0.0);

  const auto spec = analysis::ComputeSpectrogram(signals::WhiteNoise(8192, kFsIn, 3), 512, 128,
                                                 analysis::WindowKind::kHann);
  std::istringstream csv(SpectrogramToCsv(spec));
  const auto parsed = ParseCsvMatrix(csv);
  double csv_err = 0.0;
  for (std::size_t f = 0; f < parsed.size(); ++f) {
    csv_err = std::max(csv_err, MaxAbsDiff(parsed[f], spec.magnitudes_db[f]));
  }
  checks.Add("roundtrip.csv-db.max-abs-error", csv_err, Comparison::kLessEqual, 1e-6);
}

const char* ComparisonSymbol(Comparison c) {
  switch (c) {
    case Comparison::kLess: return "<";
    case Comparison::kLessEqual: return "<=";
    case Comparison::kGreaterEqual: return ">=";
    case Comparison::kGreater: return ">";
  }
  return "?";
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Suite ParseSuite(const std::string& name) {
  if (name == "pr") return Suite::kPr;
  if (name == "response") return Suite::kResponse;
  if (name == "tonal") return Suite::kTonal;
  if (name == "grads") return Suite::kGrads;
  if (name == "all") return Suite::kAll;
  throw UsageError("unknown verify suite '" + name + "' (pr|response|tonal|grads|all)");
}

const char* SuiteName(Suite suite) {
  switch (suite) {
    case Suite::kPr: return "pr";
    case Suite::kResponse: return "response";
    case Suite::kTonal: return "tonal";
    case Suite::kGrads: return "grads";
    case Suite::kAll: return "all";
  }
  return "unknown";
}

SuiteResult RunVerifySuite(Suite suite) {
  const auto start = std::chrono::steady_clock::now();
  Checks checks;
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kPr) RunPr(checks);
  if (all || suite == Suite::kResponse) RunResponse(checks);
  if (all || suite == Suite::kTonal) RunTonal(checks);
  if (all || suite == Suite::kGrads) RunGrads(checks);
  if (all) RunMisc(checks);
  SuiteResult result;
  result.suite = SuiteName(suite);
  result.checks = checks.Take();
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Json SuiteToJson(const SuiteResult& result) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = "verify";
  j["suite"] = result.suite;
  Json checks = Json::array();
  for (const auto& c : result.checks) {
    Json e;
    e["name"] = c.name;
    e["measured"] = c.measured;
    e["comparison"] = ComparisonSymbol(c.comparison);
    e["threshold"] = c.threshold;
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["pass"] = result.pass();
  return j;
}

std::string FormatCheckLine(const CheckResult& check) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "[%s] %-58s measured=%-14.6g %s %g", check.pass ? "PASS" : "FAIL",
                check.name.c_str(), check.measured, ComparisonSymbol(check.comparison),
                check.threshold);
  return buf;
}

}  // namespace upart::cli
