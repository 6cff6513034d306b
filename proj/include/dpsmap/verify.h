// Copyright 2026 The dpsmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPSMAP_VERIFY_H
#define DPSMAP_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace dpsmap {

struct CheckResult {
    std::string name;
    bool passed = true;
    double value = 0;
    double threshold = 0;
    std::string detail;
    /// Reported but never counted as a failure.
    bool informational = false;
};

struct SuiteReport {
    std::string suite;
    unsigned n = 0;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool passed() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string> &suite_names();

/// Largest N accepted by each suite.
unsigned suite_max_qubits(const std::string &suite);

/// Runs one suite (or every suite for "all") at N = n. Throws ConfigError for
/// unknown suites or n beyond the suite cap.
std::vector<SuiteReport> run_suite(const std::string &suite, unsigned n, uint64_t seed = 20240607);

}  // namespace dpsmap

#endif
