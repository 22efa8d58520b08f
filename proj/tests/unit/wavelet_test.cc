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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "upart/layers/apply.h"
#include "upart/layers/wavelet.h"
#include "upart/signals/generators.h"
#include "upart/signals/random.h"

namespace upart::layers {
namespace {

using Vec = std::vector<double>;
const double kSqrt2 = std::numbers::sqrt2;

Vec RandomVec(signals::Xoshiro256& rng, std::size_t n) {
  Vec x(n);
  for (auto& v : x) v = rng.Uniform(-1, 1);
  return x;
}

double MaxDiff(const Vec& a, const Vec& b) {
  EXPECT_EQ(a.size(), b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

LiftingParams RandomParams(signals::Xoshiro256& rng) {
  const double a = rng.Uniform(0.1, 3.0);
  return {rng.Uniform(-2, 2), rng.Uniform(-2, 2), rng.Uniform01() < 0.5 ? -a : a};
}

TEST(HaarTest, ConstantAndAlternatingPairs) {
  const auto ones = HaarAnalysis(Vec{1, 1});
  EXPECT_NEAR(ones.coarse[0], kSqrt2, 1e-15);
  EXPECT_NEAR(ones.detail[0], 0.0, 1e-15);
  const auto alt = HaarAnalysis(Vec{1, -1});
  EXPECT_NEAR(alt.coarse[0], 0.0, 1e-15);
  EXPECT_NEAR(std::abs(alt.detail[0]), kSqrt2, 1e-15);
}

TEST(HaarTest, PerfectReconstruction) {
  signals::Xoshiro256 rng(1);
  const Vec x = RandomVec(rng, 1024);
  EXPECT_LT(MaxDiff(HaarSynthesis(HaarAnalysis(x)), x), 1e-9);
}

TEST(HaarTest, FilterBankMatchesClosedForm) {
  signals::Xoshiro256 rng(2);
  const Vec x = RandomVec(rng, 64);
  const auto b = FilterBankAnalysis(x, HaarFilters());
  for (std::size_t k = 0; k < 32; ++k) {
    EXPECT_NEAR(b.coarse[k], (x[2 * k] + x[2 * k + 1]) / kSqrt2, 1e-15);
    EXPECT_NEAR(std::abs(b.detail[k]), std::abs(x[2 * k + 1] - x[2 * k]) / kSqrt2, 1e-15);
  }
}

TEST(HaarTest, PowerComplementarity) {
  const auto f = HaarFilters();
  for (int i = 0; i <= 4096; ++i) {
    const double w = std::numbers::pi * i / 4096.0;
    EXPECT_NEAR(std::norm(f.synthesis_low.Response(w)) + std::norm(f.synthesis_high.Response(w)),
                2.0, 1e-9);
  }
}

TEST(LazyTest, SplitsEvenOdd) {
  const auto b = LazyAnalysis(Vec{0, 1, 2, 3, 4, 5});
  EXPECT_EQ(b.coarse, (Vec{0, 2, 4}));
  EXPECT_EQ(b.detail, (Vec{1, 3, 5}));
  EXPECT_EQ(LazySynthesis(b), (Vec{0, 1, 2, 3, 4, 5}));
}

TEST(LiftingTest, LazyParamsAreLazyWavelet) {
  signals::Xoshiro256 rng(3);
  const Vec x = RandomVec(rng, 100);
  const auto a = LiftingAnalysis(x, LiftingParams::Lazy());
  const auto b = LazyAnalysis(x);
  EXPECT_EQ(a.coarse, b.coarse);
  EXPECT_EQ(a.detail, b.detail);
}

TEST(LiftingTest, HaarParamsOnConstantPair) {
  const auto b = LiftingAnalysis(Vec{1, 1}, LiftingParams::Haar());
  EXPECT_NEAR(b.coarse[0], kSqrt2, 1e-15);
  EXPECT_NEAR(b.detail[0], 0.0, 1e-15);
}

TEST(LiftingTest, HaarParamsMatchFilterBankUpToDetailSign) {
  signals::Xoshiro256 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec x = RandomVec(rng, 1024);
    const auto lift = LiftingAnalysis(x, LiftingParams::Haar());
    const auto bank = HaarAnalysis(x);
    EXPECT_LT(MaxDiff(lift.coarse, bank.coarse), 1e-12);
    Vec flipped = bank.detail;
    for (auto& v : flipped) v = -v;
    EXPECT_LT(std::min(MaxDiff(lift.detail, bank.detail), MaxDiff(lift.detail, flipped)), 1e-12);
  }
}

TEST(LiftingTest, RandomParamsReconstruct) {
  signals::Xoshiro256 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Vec x = RandomVec(rng, 256);
    const auto p = RandomParams(rng);
    EXPECT_LT(MaxDiff(LiftingSynthesis(LiftingAnalysis(x, p), p), x), 1e-9);
  }
}

TEST(LiftingTest, RejectsZeroNormalization) {
  EXPECT_THROW(LiftingAnalysis(Vec{1, 2}, LiftingParams{1, 1, 0}), std::invalid_argument);
}

TEST(LiftingTest, OddLengthIsPaddedAndTrimmed) {
  const auto b = LiftingAnalysis(Vec{1, 2, 3}, LiftingParams::Haar());
  EXPECT_EQ(b.coarse.size(), 2u);
  EXPECT_EQ(b.original_length, 3u);
  EXPECT_TRUE(b.padded());
  const Vec back = LiftingSynthesis(b, LiftingParams::Haar());
  EXPECT_LT(MaxDiff(back, Vec{1, 2, 3}), 1e-12);
}

TEST(LiftingGradTest, UpdatePartialAtZeroPredict) {
  signals::Xoshiro256 rng(6);
  const Vec x = RandomVec(rng, 32);
  const LiftingParams p{0, 0, 1.7};
  const auto g = LiftingParamGradients(x, p);
  for (std::size_t k = 0; k < 16; ++k) {
    const double d = x[2 * k + 1];
    EXPECT_NEAR(g.coarse_d_update[k], p.normalize * d, 1e-15);
    EXPECT_EQ(g.detail_d_update[k], 0.0);
  }
}

TEST(LiftingGradTest, MatchesCentralDifferences) {
  signals::Xoshiro256 rng(7);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const Vec x = RandomVec(rng, 16);
    const LiftingParams p = RandomParams(rng);
    const auto g = LiftingParamGradients(x, p);
    auto fd = [&](double LiftingParams::*field, bool coarse, std::size_t k) {
      LiftingParams hi = p, lo = p;
      hi.*field += h;
      lo.*field -= h;
      const auto bh = LiftingAnalysis(x, hi);
      const auto bl = LiftingAnalysis(x, lo);
      return coarse ? (bh.coarse[k] - bl.coarse[k]) / (2 * h) : (bh.detail[k] - bl.detail[k]) / (2 * h);
    };
    for (std::size_t k = 0; k < 8; ++k) {
      const std::pair<double, double> cases[] = {
          {g.coarse_d_predict[k], fd(&LiftingParams::predict, true, k)},
          {g.coarse_d_update[k], fd(&LiftingParams::update, true, k)},
          {g.coarse_d_normalize[k], fd(&LiftingParams::normalize, true, k)},
          {g.detail_d_predict[k], fd(&LiftingParams::predict, false, k)},
          {g.detail_d_update[k], fd(&LiftingParams::update, false, k)},
          {g.detail_d_normalize[k], fd(&LiftingParams::normalize, false, k)}};
      for (const auto& [analytic, numeric] : cases) {
        EXPECT_LE(std::abs(analytic - numeric), 1e-6 * std::max(1.0, std::abs(analytic)));
      }
    }
  }
}

TEST(LiftingGradTest, ZeroInputHasZeroPartials) {
  const auto g = LiftingParamGradients(Vec(10, 0.0), LiftingParams{0.4, -1.1, 2.0});
  for (const Vec* v : {&g.coarse_d_predict, &g.coarse_d_update, &g.coarse_d_normalize,
                       &g.detail_d_predict, &g.detail_d_update, &g.detail_d_normalize}) {
    for (double d : *v) EXPECT_EQ(d, 0.0);
  }
}

TEST(LiftingGradTest, BackwardIsContractionOfPartials) {
  signals::Xoshiro256 rng(8);
  const Vec x = RandomVec(rng, 40);
  const LiftingParams p = RandomParams(rng);
  const Vec gc = RandomVec(rng, 20), gd = RandomVec(rng, 20);
  const auto g = LiftingParamGradients(x, p);
  const auto back = LiftingBackward(x, p, gc, gd);
  double wp = 0, wu = 0, wa = 0;
  for (std::size_t k = 0; k < 20; ++k) {
    wp += gc[k] * g.coarse_d_predict[k] + gd[k] * g.detail_d_predict[k];
    wu += gc[k] * g.coarse_d_update[k] + gd[k] * g.detail_d_update[k];
    wa += gc[k] * g.coarse_d_normalize[k] + gd[k] * g.detail_d_normalize[k];
  }
  EXPECT_NEAR(back.predict, wp, 1e-12);
  EXPECT_NEAR(back.update, wu, 1e-12);
  EXPECT_NEAR(back.normalize, wa, 1e-12);
}

TEST(CascadeTest, LazyTwoLevels) {
  const WaveletBase lazy{WaveletKind::kLazy, {}};
  const auto bands = CascadeAnalysis(Vec{0, 1, 2, 3, 4, 5, 6, 7}, lazy, 2);
  EXPECT_EQ(bands.coarse, (Vec{0, 4}));
  ASSERT_EQ(bands.details.size(), 2u);
  EXPECT_EQ(bands.details[0], (Vec{1, 3, 5, 7}));
  EXPECT_EQ(bands.details[1], (Vec{2, 6}));
  EXPECT_EQ(CascadeSynthesis(bands, lazy), (Vec{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(CascadeTest, SingleLevelEqualsBase) {
  signals::Xoshiro256 rng(9);
  const Vec x = RandomVec(rng, 64);
  const auto c = CascadeAnalysis(x, {WaveletKind::kHaar, {}}, 1);
  const auto b = HaarAnalysis(x);
  EXPECT_EQ(c.coarse, b.coarse);
  EXPECT_EQ(c.details[0], b.detail);
}

TEST(CascadeTest, RoundTripAllBases) {
  signals::Xoshiro256 rng(10);
  for (std::size_t n : {1024u, 1023u, 1021u, 6u}) {
    const Vec x = RandomVec(rng, n);
    for (const WaveletBase& base : {WaveletBase{WaveletKind::kLazy, {}},
                                    WaveletBase{WaveletKind::kHaar, {}},
                                    WaveletBase{WaveletKind::kLifting, {0.3, -0.2, 1.7}}}) {
      for (int levels : {1, 2}) {
        EXPECT_LT(MaxDiff(CascadeSynthesis(CascadeAnalysis(x, base, levels), base), x), 1e-9);
      }
    }
  }
}

TEST(WaveletUpsampleTest, RateAndLength) {
  UpsamplerSpec spec;
  spec.kind = LayerKind::kWaveletHaar;
  spec.factor = 4;
  const auto y = Upsample(signals::Ones(100, 8000), spec);
  EXPECT_EQ(y.sample_rate_hz(), 32000);
  EXPECT_EQ(y.frames(), 400u);
  spec.factor = 3;
  EXPECT_THROW(Upsample(signals::Ones(100, 8000), spec), std::invalid_argument);
}

TEST(WaveletUpsampleTest, HaarZeroDetailIsScaledHold) {
  UpsamplerSpec spec;
  spec.kind = LayerKind::kWaveletHaar;
  spec.factor = 2;
  const Vec y = UpsampleChannel(Vec{1, 2}, spec);
  ASSERT_EQ(y.size(), 4u);
  EXPECT_NEAR(y[0], y[1], 1e-15);
  EXPECT_NEAR(y[2], y[3], 1e-15);
  EXPECT_NEAR(y[2] / y[0], 2.0, 1e-15);
}

TEST(WaveletUpsampleTest, RoundTripRestoresInput) {
  UpsamplerSpec spec;
  spec.kind = LayerKind::kWaveletLifting;
  spec.factor = 2;
  spec.lifting = {1, 0.5, 1.41421356};
  const auto x = signals::WhiteNoise(999, 8000, 3);
  const auto y = WaveletRoundTrip(x, spec);
  EXPECT_EQ(y.sample_rate_hz(), 8000);
  ASSERT_EQ(y.frames(), x.frames());
  for (std::size_t i = 0; i < x.frames(); ++i) EXPECT_NEAR(y.channel(0)[i], x.channel(0)[i], 1e-9);
}

}  // namespace
}  // namespace upart::layers
