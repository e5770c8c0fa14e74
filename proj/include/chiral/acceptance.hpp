// Copyright 2026 The chiral-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHIRAL_ACCEPTANCE_HPP
#define CHIRAL_ACCEPTANCE_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace chiral::acceptance {

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Criterion {
    std::string id;
    std::string title;
    std::function<CriterionResult()> run;
};

/// The reproduction criteria A1..A9 at the reference parameters.
std::vector<Criterion> criteria();

/// Runs every criterion, printing one line per result as it completes.
std::vector<CriterionResult> run_all(std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace chiral::acceptance

#endif  // CHIRAL_ACCEPTANCE_HPP
