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

#ifndef QUATCODE_REPORT_HPP
#define QUATCODE_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace quatcode {

/// One named pass/fail verification; `detail` carries the counterexample or
/// the observed values.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = {});
  void merge(const Report& other, const std::string& prefix = {});
  bool passed() const;
  const Check* first_failure() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace quatcode

#endif  // QUATCODE_REPORT_HPP
