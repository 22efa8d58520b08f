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

#ifndef UPART_CLI_EXPORT_H_
#define UPART_CLI_EXPORT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "upart/analysis/spectral.h"

namespace upart::cli {

// One line per frame, one comma-separated field per bin, fixed 6 decimals,
// LF line endings, no header.
std::string SpectrogramToCsv(const analysis::Spectrogram& spectrogram);
std::vector<std::vector<double>> ParseCsvMatrix(std::istream& in);

// Binary PGM (P5, maxval 255): width = frames, height = bins, highest bin in
// the top row. Levels from (peak - range_db) to the peak map linearly onto
// 0..255; anything lower clamps to 0.
std::vector<std::uint8_t> SpectrogramToPgm(const analysis::Spectrogram& spectrogram,
                                           double range_db = 80.0);

void WriteTextFile(const std::filesystem::path& path, const std::string& text);
void WriteBinaryFile(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

}  // namespace upart::cli

#endif  // UPART_CLI_EXPORT_H_
