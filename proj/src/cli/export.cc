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

#include "upart/cli/export.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace upart::cli {

std::string SpectrogramToCsv(const analysis::Spectrogram& spectrogram) {
  std::string out;
  char buf[64];
  for (const auto& row : spectrogram.magnitudes_db) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k != 0) out.push_back(',');
      const int n = std::snprintf(buf, sizeof(buf), "%.6f", row[k]);
      out.append(buf, static_cast<std::size_t>(n));
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<std::vector<double>> ParseCsvMatrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      double v = 0.0;
      const auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) throw std::invalid_argument("bad CSV field in line: " + line);
      row.push_back(v);
      p = next;
      if (p < end) {
        if (*p != ',') throw std::invalid_argument("expected ',' in CSV line: " + line);
        ++p;
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("ragged CSV matrix");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::uint8_t> SpectrogramToPgm(const analysis::Spectrogram& spectrogram,
                                           double range_db) {
  if (!(range_db > 0.0)) throw std::invalid_argument("PGM dB range must be positive");
  const std::size_t width = spectrogram.frames();
  const std::size_t height = spectrogram.bins();
  double peak = analysis::kDbFloor;
  for (const auto& row : spectrogram.magnitudes_db) {
    for (double v : row) peak = std::max(peak, v);
  }
  const std::string header =
      "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + width * height);
  for (std::size_t r = 0; r < height; ++r) {
    const std::size_t bin = height - 1 - r;
    for (std::size_t f = 0; f < width; ++f) {
      const double rel = (spectrogram.magnitudes_db[f][bin] - peak + range_db) / range_db;
      const double level = std::round(std::clamp(rel, 0.0, 1.0) * 255.0);
      out.push_back(static_cast<std::uint8_t>(level));
    }
  }
  return out;
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void WriteBinaryFile(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace upart::cli
