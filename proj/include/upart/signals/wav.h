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

#ifndef UPART_SIGNALS_WAV_H_
#define UPART_SIGNALS_WAV_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "upart/signals/signal.h"

namespace upart::signals {

// Malformed or unsupported RIFF/WAVE data.
class WavError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WavFormat { kPcm16, kFloat32 };

struct WavWriteStats {
  // Samples with |x| > 1 that were saturated when encoding PCM16.
  std::size_t clipped_samples = 0;
};

// Little-endian RIFF/WAVE with format tag 1 (16-bit PCM) or 3 (32-bit IEEE
// float). WAVE_FORMAT_EXTENSIBLE headers wrapping either sub-format are
// accepted on read. PCM16 is scaled by 32768 on both sides.
std::vector<std::uint8_t> EncodeWav(const Signal& signal, WavFormat format,
                                    WavWriteStats* stats = nullptr);
Signal DecodeWav(std::span<const std::uint8_t> bytes);

WavWriteStats WriteWav(const std::filesystem::path& path, const Signal& signal,
                       WavFormat format);
Signal ReadWav(const std::filesystem::path& path);

WavFormat ParseWavFormat(const std::string& name);
const char* WavFormatName(WavFormat format);

}  // namespace upart::signals

#endif  // UPART_SIGNALS_WAV_H_
