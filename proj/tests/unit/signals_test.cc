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
#include <cstring>
#include <filesystem>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "upart/signals/generators.h"
#include "upart/signals/random.h"
#include "upart/signals/signal.h"
#include "upart/signals/wav.h"

namespace upart::signals {
namespace {

std::vector<double> Samples(const Signal& s, std::size_t c = 0) {
  const auto ch = s.channel(c);
  return {ch.begin(), ch.end()};
}

TEST(SignalTest, RejectsInvalidConstruction) {
  EXPECT_THROW(Signal({{1.0}}, 0), std::invalid_argument);
  EXPECT_THROW(Signal({}, 8000), std::invalid_argument);
  EXPECT_THROW(Signal({{1.0, 2.0}, {1.0}}, 8000), std::invalid_argument);
  EXPECT_THROW(Signal({{std::numeric_limits<double>::quiet_NaN()}}, 8000), std::invalid_argument);
  EXPECT_THROW(Signal({{std::numeric_limits<double>::infinity()}}, 8000), std::invalid_argument);
}

TEST(SignalTest, ExposesShape) {
  const Signal s({{1, 2, 3}, {4, 5, 6}}, 44100);
  EXPECT_EQ(s.channels(), 2u);
  EXPECT_EQ(s.frames(), 3u);
  EXPECT_EQ(s.sample_rate_hz(), 44100);
  EXPECT_EQ(s.channel(1)[2], 6.0);
  EXPECT_EQ(s.WithSampleRate(8000).sample_rate_hz(), 8000);
}

TEST(RandomTest, SplitMixSeedingIsStable) {
  Xoshiro256 a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    const auto va = a.Next();
    EXPECT_EQ(va, b.Next());
    EXPECT_NE(va, c.Next());
  }
}

TEST(RandomTest, UniformStaysInRange) {
  Xoshiro256 rng(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.Uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = rng.Uniform(-0.25, 0.5);
    ASSERT_GE(v, -0.25);
    ASSERT_LT(v, 0.5);
  }
}

TEST(RandomTest, DerivedSeedsDiffer) {
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(2, 0));
  EXPECT_EQ(DeriveSeed(5, 9), DeriveSeed(5, 9));
}

TEST(WhiteNoiseTest, IsDeterministicPerSeed) {
  EXPECT_EQ(WhiteNoise(4, 8000, 7), WhiteNoise(4, 8000, 7));
  EXPECT_NE(WhiteNoise(4, 8000, 7), WhiteNoise(4, 8000, 8));
}

TEST(WhiteNoiseTest, MeanNearZeroAndBounded) {
  const auto x = Samples(WhiteNoise(32768, 8000, 1));
  double sum = 0.0;
  for (double v : x) {
    ASSERT_GE(v, -1.0);
    ASSERT_LT(v, 1.0);
    sum += v;
  }
  EXPECT_NEAR(sum / static_cast<double>(x.size()), 0.0, 0.02);
}

TEST(GeneratorTest, RejectsEmpty) {
  EXPECT_THROW(WhiteNoise(0, 8000, 1), std::invalid_argument);
  EXPECT_THROW(Ones(0, 8000), std::invalid_argument);
  EXPECT_THROW(Tone(0, 8000, 1000, 1), std::invalid_argument);
}

TEST(OnesTest, AllOnes) {
  EXPECT_EQ(Samples(Ones(3, 8000)), (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(Samples(Ones(1, 8000)), (std::vector<double>{1}));
}

TEST(ToneTest, QuarterPeriodSampling) {
  const auto x = Samples(Tone(4, 8000, 2000, 1));
  const std::vector<double> want = {0, 1, 0, -1};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(x[i], want[i], 1e-12);
}

TEST(ToneTest, RejectsAliasedFrequency) {
  EXPECT_THROW(Tone(8, 8000, 5000, 1), std::invalid_argument);
  EXPECT_THROW(Tone(8, 8000, 4000, 1), std::invalid_argument);
  EXPECT_THROW(Tone(8, 8000, 0, 1), std::invalid_argument);
}

class WavTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("upart_wav_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(WavTest, Float32RoundTripIsBitExact) {
  Xoshiro256 rng(3);
  std::vector<std::vector<double>> ch(2, std::vector<double>(777));
  for (auto& c : ch) {
    for (auto& v : c) v = static_cast<float>(rng.Uniform(-1.0, 1.0));
  }
  const Signal s(ch, 22050);
  WriteWav(dir_ / "a.wav", s, WavFormat::kFloat32);
  const Signal back = ReadWav(dir_ / "a.wav");
  ASSERT_EQ(back.sample_rate_hz(), 22050);
  ASSERT_EQ(back.channels(), 2u);
  for (std::size_t c = 0; c < 2; ++c) {
    ASSERT_EQ(std::memcmp(back.channel(c).data(), s.channel(c).data(), 777 * sizeof(double)), 0);
  }
}

TEST_F(WavTest, Pcm16WithinQuantizationStep) {
  WriteWav(dir_ / "b.wav", Signal::Mono({0.5, -0.25, 0.1}, 8000), WavFormat::kPcm16);
  const auto x = Samples(ReadWav(dir_ / "b.wav"));
  EXPECT_NEAR(x[0], 0.5, 1.0 / 32768);
  EXPECT_NEAR(x[1], -0.25, 1.0 / 32768);
  EXPECT_NEAR(x[2], 0.1, 1.0 / 32768);
}

TEST(WavCodecTest, Pcm16ClipsAndCounts) {
  WavWriteStats stats;
  const auto bytes = EncodeWav(Signal::Mono({1.5, -2.0, 0.0, 1.0}, 8000), WavFormat::kPcm16, &stats);
  EXPECT_EQ(stats.clipped_samples, 2u);
  const auto x = Samples(DecodeWav(bytes));
  EXPECT_NEAR(x[0], 32767.0 / 32768.0, 1e-12);
  EXPECT_EQ(x[1], -1.0);
}

TEST(WavCodecTest, HeaderLayout) {
  const auto bytes = EncodeWav(Signal::Mono({0.0, 0.0}, 8000), WavFormat::kFloat32);
  ASSERT_EQ(bytes.size(), 44u + 8u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "RIFF");
  EXPECT_EQ(std::string(bytes.begin() + 8, bytes.begin() + 12), "WAVE");
  EXPECT_EQ(bytes[20], 3);  // IEEE float
  EXPECT_EQ(EncodeWav(Signal::Mono({0.0}, 8000), WavFormat::kPcm16)[20], 1);
}

TEST(WavCodecTest, RejectsTruncatedFile) {
  const std::vector<std::uint8_t> five = {'R', 'I', 'F', 'F', 0};
  try {
    DecodeWav(five);
    FAIL() << "expected WavError";
  } catch (const WavError& e) {
    EXPECT_NE(std::string(e.what()).find("malformed"), std::string::npos);
  }
}

TEST(WavCodecTest, RejectsUnsupportedCodec) {
  auto bytes = EncodeWav(Signal::Mono({0.0}, 8000), WavFormat::kPcm16);
  bytes[34] = 24;  // bits per sample
  try {
    DecodeWav(bytes);
    FAIL() << "expected WavError";
  } catch (const WavError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported"), std::string::npos);
  }
}

TEST(WavCodecTest, SkipsUnknownChunks) {
  auto bytes = EncodeWav(Signal::Mono({0.25, -0.5}, 16000), WavFormat::kFloat32);
  // Insert an odd-sized LIST chunk (padded to even) between fmt and data.
  const std::vector<std::uint8_t> list = {'L', 'I', 'S', 'T', 3, 0, 0, 0, 'a', 'b', 'c', 0};
  bytes.insert(bytes.begin() + 36, list.begin(), list.end());
  const std::uint32_t riff = static_cast<std::uint32_t>(bytes.size() - 8);
  std::memcpy(bytes.data() + 4, &riff, 4);
  const Signal s = DecodeWav(bytes);
  EXPECT_EQ(s.sample_rate_hz(), 16000);
  EXPECT_EQ(Samples(s), (std::vector<double>{0.25, -0.5}));
}

TEST(WavCodecTest, FormatNames) {
  EXPECT_EQ(ParseWavFormat("pcm16"), WavFormat::kPcm16);
  EXPECT_EQ(ParseWavFormat("float32"), WavFormat::kFloat32);
  EXPECT_THROW(ParseWavFormat("mp3"), std::invalid_argument);
}

}  // namespace
}  // namespace upart::signals
