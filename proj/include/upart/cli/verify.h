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

#ifndef UPART_CLI_VERIFY_H_
#define UPART_CLI_VERIFY_H_

#include <string>
#include <vector>

#include "upart/cli/run_config.h"

namespace upart::cli {

enum class Comparison { kLess, kLessEqual, kGreaterEqual, kGreater };

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::kLess;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool pass() const;
};

enum class Suite { kPr, kResponse, kTonal, kGrads, kAll };

Suite ParseSuite(const std::string& name);
const char* SuiteName(Suite suite);

// Runs the self-check suite with fixed seeds.
SuiteResult RunVerifySuite(Suite suite);

// Report body; `seconds` is left out so repeated runs serialize identically.
Json SuiteToJson(const SuiteResult& result);
std::string FormatCheckLine(const CheckResult& check);

}  // namespace upart::cli

#endif  // UPART_CLI_VERIFY_H_
