// Copyright 2026 The quatcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file acceptance.hpp
 * @brief The end-to-end acceptance criteria, each a self-contained Report.
 */

#ifndef QUATCODE_ACCEPTANCE_HPP
#define QUATCODE_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatcode/report.hpp"

namespace quatcode {

struct AcceptanceOptions {
  bool long_mode = false;
  unsigned threads = 0;
  std::uint64_t seed = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool skipped = false;
  Report report;
  double seconds = 0;

  bool passed() const { return skipped || report.passed(); }
  /// "PASS  3  dual parameters ... (1.2 s)".
  std::string line() const;
};

// Individual criteria; each returns the full list of checks it ran.
Report criterion_mds_family(const AcceptanceOptions& options);
Report criterion_quaternary_parameters(const AcceptanceOptions& options);
Report criterion_dual_parameters(const AcceptanceOptions& options);
Report criterion_h1_oracle(const AcceptanceOptions& options);
Report criterion_delsarte(const AcceptanceOptions& options);
Report criterion_designs(const AcceptanceOptions& options);
Report criterion_lemmas(const AcceptanceOptions& options);
Report criterion_group_action(const AcceptanceOptions& options);
Report criterion_h4_long(const AcceptanceOptions& options);

/// Runs criteria 1..9 (9 only in long mode), reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

nlohmann::ordered_json to_json(const std::vector<CriterionResult>& results, bool with_timing = true);

}  // namespace quatcode

#endif  // QUATCODE_ACCEPTANCE_HPP
