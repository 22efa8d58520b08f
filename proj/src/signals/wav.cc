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

#include "upart/signals/wav.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

namespace upart::signals {
namespace {

constexpr std::uint16_t kTagPcm = 1;
constexpr std::uint16_t kTagFloat = 3;
constexpr std::uint16_t kTagExtensible = 0xFFFE;

class ByteWriter {
 public:
  void Tag(const char (&tag)[5]) { bytes_.insert(bytes_.end(), tag, tag + 4); }
  void U16(std::uint16_t v) {
    bytes_.push_back(static_cast<std::uint8_t>(v));
    bytes_.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void U32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> Take() { return std::move(bytes_); }
  std::size_t size() const { return bytes_.size(); }
  void Reserve(std::size_t n) { bytes_.reserve(n); }

 private:
  std::vector<std::uint8_t> bytes_;
};

std::uint16_t LoadU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t LoadU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

bool TagIs(const std::uint8_t* p, const char* tag) {
  return std::memcmp(p, tag, 4) == 0;
}

std::int16_t ToPcm16(double x, std::size_t& clipped) {
  if (std::abs(x) > 1.0) ++clipped;
  const double scaled = std::round(x * 32768.0);
  return static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
}

}  // namespace

std::vector<std::uint8_t> EncodeWav(const Signal& signal, WavFormat format,
                                    WavWriteStats* stats) {
  const std::uint16_t channels = static_cast<std::uint16_t>(signal.channels());
  const std::uint16_t bits = format == WavFormat::kPcm16 ? 16 : 32;
  const std::uint16_t block_align = static_cast<std::uint16_t>(channels * bits / 8);
  const std::uint64_t data_bytes =
      static_cast<std::uint64_t>(signal.frames()) * block_align;
  if (data_bytes > std::numeric_limits<std::uint32_t>::max() - 36) {
    throw WavError("signal too long for a RIFF/WAVE file");
  }
  const auto rate = static_cast<std::uint32_t>(signal.sample_rate_hz());

  ByteWriter w;
  w.Reserve(44 + data_bytes);
  w.Tag("RIFF");
  w.U32(static_cast<std::uint32_t>(36 + data_bytes));
  w.Tag("WAVE");
  w.Tag("fmt ");
  w.U32(16);
  w.U16(format == WavFormat::kPcm16 ? kTagPcm : kTagFloat);
  w.U16(channels);
  w.U32(rate);
  w.U32(rate * block_align);
  w.U16(block_align);
  w.U16(bits);
  w.Tag("data");
  w.U32(static_cast<std::uint32_t>(data_bytes));

  std::size_t clipped = 0;
  for (std::size_t i = 0; i < signal.frames(); ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      const double x = signal.channel(c)[i];
      if (format == WavFormat::kPcm16) {
        w.U16(std::bit_cast<std::uint16_t>(ToPcm16(x, clipped)));
      } else {
        w.U32(std::bit_cast<std::uint32_t>(static_cast<float>(x)));
      }
    }
  }
  if (stats != nullptr) stats->clipped_samples = clipped;
  return w.Take();
}

Signal DecodeWav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !TagIs(bytes.data(), "RIFF") ||
      !TagIs(bytes.data() + 8, "WAVE")) {
    throw WavError("malformed header: not a RIFF/WAVE stream");
  }

  bool have_fmt = false;
  std::uint16_t tag = 0, channels = 0, bits = 0, block_align = 0;
  std::uint32_t rate = 0;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::size_t size = LoadU32(chunk + 4);
    const std::size_t body = pos + 8;
    if (size > bytes.size() - body) {
      throw WavError("malformed header: chunk runs past end of file");
    }
    if (TagIs(chunk, "fmt ")) {
      if (size < 16) throw WavError("malformed header: fmt chunk too short");
      const std::uint8_t* f = bytes.data() + body;
      tag = LoadU16(f);
      channels = LoadU16(f + 2);
      rate = LoadU32(f + 4);
      block_align = LoadU16(f + 12);
      bits = LoadU16(f + 14);
      if (tag == kTagExtensible) {
        if (size < 40) throw WavError("malformed header: short extensible fmt chunk");
        tag = LoadU16(f + 24);
      }
      have_fmt = true;
    } else if (TagIs(chunk, "data")) {
      data = bytes.data() + body;
      data_size = size;
    }
    pos = body + size + (size & 1);
  }

  if (!have_fmt) throw WavError("malformed header: missing fmt chunk");
  if (data == nullptr) throw WavError("malformed header: missing data chunk");
  if (channels == 0 || rate == 0) {
    throw WavError("malformed header: zero channels or sample rate");
  }
  const bool pcm16 = tag == kTagPcm && bits == 16;
  const bool float32 = tag == kTagFloat && bits == 32;
  if (!pcm16 && !float32) {
    throw WavError("unsupported codec: format tag " + std::to_string(tag) + " with " +
                   std::to_string(bits) + " bits");
  }
  const std::size_t bytes_per_sample = bits / 8;
  if (block_align != channels * bytes_per_sample) {
    throw WavError("malformed header: inconsistent block alignment");
  }
  if (rate > static_cast<std::uint32_t>(std::numeric_limits<int>::max())) {
    throw WavError("malformed header: sample rate out of range");
  }

  const std::size_t frames = data_size / block_align;
  std::vector<std::vector<double>> planar(channels, std::vector<double>(frames));
  for (std::size_t i = 0; i < frames; ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      const std::uint8_t* p = data + (i * channels + c) * bytes_per_sample;
      planar[c][i] = pcm16 ? std::bit_cast<std::int16_t>(LoadU16(p)) / 32768.0
                           : static_cast<double>(std::bit_cast<float>(LoadU32(p)));
    }
  }
  if (frames == 0) throw WavError("data chunk holds no samples");
  try {
    return Signal(std::move(planar), static_cast<int>(rate));
  } catch (const std::invalid_argument& e) {
    throw WavError(std::string("invalid sample data: ") + e.what());
  }
}

WavWriteStats WriteWav(const std::filesystem::path& path, const Signal& signal,
                       WavFormat format) {
  WavWriteStats stats;
  const auto bytes = EncodeWav(signal, format, &stats);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
  return stats;
}

Signal ReadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return DecodeWav(bytes);
}

WavFormat ParseWavFormat(const std::string& name) {
  if (name == "pcm16") return WavFormat::kPcm16;
  if (name == "float32") return WavFormat::kFloat32;
  throw std::invalid_argument("unknown WAV format '" + name + "' (pcm16|float32)");
}

const char* WavFormatName(WavFormat format) {
  return format == WavFormat::kPcm16 ? "pcm16" : "float32";
}

}  // namespace upart::signals
