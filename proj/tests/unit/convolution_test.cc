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

#include "upart/layers/apply.h"
#include "upart/layers/convolution.h"
#include "upart/signals/random.h"

namespace upart::layers {
namespace {

using Vec = std::vector<double>;

Vec Channel(const FeatureMap& f, std::size_t c = 0) {
  const auto s = f.channel(c);
  return {s.begin(), s.end()};
}

UpsamplerSpec ConvSpec(LayerKind kind, int length, std::uint64_t seed) {
  UpsamplerSpec s;
  s.kind = kind;
  s.factor = 4;
  s.filter_length = length;
  s.seed = seed;
  return s;
}

TEST(OverlapTest, NamedRegimes) {
  EXPECT_EQ(ClassifyOverlap(4, 4), Overlap::kNone);
  EXPECT_EQ(ClassifyOverlap(8, 4), Overlap::kFull);
  EXPECT_EQ(ClassifyOverlap(9, 4), Overlap::kPartial);
  EXPECT_STREQ(OverlapName(Overlap::kNone), "no-overlap");
  EXPECT_STREQ(OverlapName(Overlap::kFull), "full-overlap");
  EXPECT_STREQ(OverlapName(Overlap::kPartial), "partial-overlap");
}

TEST(OverlapTest, ExhaustiveGridAgainstCoverage) {
  for (int length = 1; length <= 32; ++length) {
    for (int stride = 1; stride <= 32; ++stride) {
      // Count how many kernel copies land on each output of a long steady-state run.
      const int copies = 64;
      std::vector<int> hits((copies - 1) * stride + length, 0);
      for (int k = 0; k < copies; ++k) {
        for (int i = 0; i < length; ++i) ++hits[k * stride + i];
      }
      int lo = 1 << 30, hi = 0;
      for (int n = 32 * stride; n < 33 * stride; ++n) {
        lo = std::min(lo, hits[n]);
        hi = std::max(hi, hits[n]);
      }
      const Overlap want = lo != hi ? Overlap::kPartial : lo == 1 ? Overlap::kNone : Overlap::kFull;
      EXPECT_EQ(ClassifyOverlap(length, stride), want) << length << "," << stride;
    }
  }
}

TEST(TransposedConvTest, ImpulseReproducesKernel) {
  const ConvFilters w(1, 1, 4, {0.1, 0.2, 0.3, 0.4});
  const FeatureMap x({{1.0}}, 100.0);
  const auto y = TransposedConv(x, w, 4);
  EXPECT_EQ(Channel(y), (Vec{0.1, 0.2, 0.3, 0.4}));
  EXPECT_EQ(y.sample_rate_hz(), 400.0);
}

TEST(TransposedConvTest, FullOverlapSumsCopies) {
  const ConvFilters w(1, 1, 8, Vec(8, 1.0));
  const auto y = TransposedConv(FeatureMap({{1.0, 1.0}}, 8000.0), w, 4);
  EXPECT_EQ(Channel(y), (Vec{1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1}));
}

TEST(TransposedConvTest, OutputLength) {
  for (int length : {4, 5, 8, 9}) {
    const ConvFilters w(1, 1, length, Vec(length, 0.5));
    EXPECT_EQ(TransposedConv(FeatureMap({Vec(10, 1.0)}, 1.0), w, 4).length(),
              static_cast<std::size_t>(9 * 4 + length));
  }
}

TEST(TransposedConvTest, RejectsShortFilters) {
  EXPECT_THROW(TransposedConv(FeatureMap({{1.0}}, 1.0), ConvFilters(1, 1, 3, Vec(3, 1.0)), 4),
               std::invalid_argument);
  EXPECT_THROW(TransposedConv(FeatureMap({{1.0}, {1.0}}, 1.0), ConvFilters(1, 1, 4, Vec(4, 1.0)), 4),
               std::invalid_argument);
}

TEST(TransposedConvTest, SumsOverInputChannels) {
  const ConvFilters w(1, 2, 2, {1, 0, 0, 1});
  const auto y = TransposedConv(FeatureMap({{1, 2}, {3, 4}}, 1.0), w, 2);
  EXPECT_EQ(Channel(y), (Vec{1, 3, 2, 4}));
}

TEST(RandomFiltersTest, DeterministicAndBounded) {
  const auto spec = ConvSpec(LayerKind::kTransposed, 9, 17);
  EXPECT_EQ(RandomFilters(spec), RandomFilters(spec));
  EXPECT_NE(RandomFilters(spec), RandomFilters(ConvSpec(LayerKind::kTransposed, 9, 18)));

  UpsamplerSpec big = ConvSpec(LayerKind::kTransposed, 16, 1);
  const auto w = RandomFilters(big, 1, 6250);  // 10^5 draws
  ASSERT_EQ(w.coeffs().size(), 100000u);
  const double bound = 1.0 / std::sqrt(16.0);
  double lo = 1.0, hi = -1.0;
  for (double c : w.coeffs()) {
    ASSERT_GE(c, -bound);
    ASSERT_LE(c, bound);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  EXPECT_LT(lo, -0.99 * bound);
  EXPECT_GT(hi, 0.99 * bound);
}

TEST(RandomFiltersTest, SubpixelHasOneBranchPerPhase) {
  const auto w = RandomFilters(ConvSpec(LayerKind::kSubpixel, 9, 1));
  EXPECT_EQ(w.out_channels(), 4u);
  EXPECT_EQ(w.in_channels(), 1u);
  EXPECT_EQ(w.length(), 9u);
}

TEST(ShuffleTest, Interleaves) {
  EXPECT_EQ(Channel(PeriodicShuffle(FeatureMap({{1, 2}, {3, 4}}, 10.0), 2)), (Vec{1, 3, 2, 4}));
  const auto y = PeriodicShuffle(FeatureMap({{1, 2}, {3, 4}, {5, 6}, {7, 8}}, 10.0), 4);
  EXPECT_EQ(Channel(y), (Vec{1, 3, 5, 7, 2, 4, 6, 8}));
  EXPECT_EQ(y.sample_rate_hz(), 40.0);
}

TEST(ShuffleTest, FactorOneIsIdentity) {
  const FeatureMap z({{1, 2, 3}}, 10.0);
  EXPECT_EQ(PeriodicShuffle(z, 1), z);
}

TEST(ShuffleTest, RejectsIndivisibleChannels) {
  EXPECT_THROW(PeriodicShuffle(FeatureMap({{1}, {2}, {3}}, 1.0), 2), std::invalid_argument);
}

TEST(ShuffleTest, BijectiveOnRandomShapes) {
  signals::Xoshiro256 rng(8);
  for (int factor : {1, 2, 3, 4}) {
    for (int groups : {1, 2, 3}) {
      std::vector<Vec> z(static_cast<std::size_t>(factor * groups), Vec(11));
      for (auto& c : z) {
        for (auto& v : c) v = rng.Uniform(-1, 1);
      }
      const FeatureMap fm(z, 5.0);
      const auto shuffled = PeriodicShuffle(fm, factor);
      EXPECT_EQ(shuffled.channels(), static_cast<std::size_t>(groups));
      EXPECT_EQ(PeriodicUnshuffle(shuffled, factor), fm);
    }
  }
}

TEST(SubpixelTest, IdenticalBranchesKeepConstantsConstant) {
  const ConvFilters w(4, 1, 3, {0.2, 0.5, 0.3, 0.2, 0.5, 0.3, 0.2, 0.5, 0.3, 0.2, 0.5, 0.3});
  const auto y = SubpixelConv(FeatureMap({Vec(32, 1.0)}, 8000.0), w, 4);
  const Vec out = Channel(y);
  ASSERT_EQ(out.size(), 128u);
  for (std::size_t n = 8; n + 8 < out.size(); ++n) EXPECT_NEAR(out[n], 1.0, 1e-12);
  EXPECT_EQ(y.sample_rate_hz(), 32000.0);
}

TEST(SubpixelTest, DistinctBranchesProducePeriodicPattern) {
  const auto spec = ConvSpec(LayerKind::kSubpixel, 9, 2);
  const Vec y = UpsampleChannel(Vec(64, 1.0), spec);
  // Steady-state output repeats with period 4 and is not constant.
  for (std::size_t n = 40; n + 44 < y.size(); ++n) EXPECT_NEAR(y[n], y[n + 4], 1e-12);
  EXPECT_GT(std::abs(y[40] - y[41]) + std::abs(y[41] - y[42]) + std::abs(y[42] - y[43]), 1e-6);
}

TEST(SameConvTest, CenteredKernel) {
  const ConvFilters w(1, 1, 3, {1, 2, 3});
  // Cross-correlation with look-back 1: y[n] = x[n-1] + 2 x[n] + 3 x[n+1].
  EXPECT_EQ(Channel(SameConv(FeatureMap({{0, 1, 0, 0}}, 1.0), w)), (Vec{3, 2, 1, 0}));
}

}  // namespace
}  // namespace upart::layers
