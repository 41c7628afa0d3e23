// Copyright 2026 The qubench developers
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

#pragma once

#include <string>
#include <vector>

namespace qubench {

/// Problem-level solution: the decoded assignment plus a domain-checked
/// verdict. All objectives are minimization internally; report layers
/// un-negate maximization problems.
///
/// The assignment vector is interpreted per problem family:
///   maxcut    - one 0/1 side per vertex
///   setcover  - chosen subset indices
///   portfolio - one 0/1 selection flag per asset
///   salbp     - 1-based station per task (0 = unassigned)
struct DomainSolution {
  std::string problem;
  std::vector<int> assignment;
  double objective = 0.0;
  bool feasible = false;
  std::vector<std::string> violations;
};

}  // namespace qubench
