// Copyright 2026 The macrules Authors
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

#include <optional>
#include <utility>
#include <vector>

#include "mac/problem.hpp"

namespace mac {

enum class DeactivationCause {
  kIssueExhausted,  // some claimed issue ran out of capacity
  kClaimExhausted,  // the residual claim reached zero
};

/// One round of the constrained proportional awards procedure. All index
/// vectors refer to the positions in the traced problem.
struct StepRecord {
  int index = 0;  // 1-based step number s
  std::vector<int> active_issues;
  std::vector<int> active_claimants;
  /// (issue, factor) for each active issue; nullopt marks an issue with no
  /// active demand, which never constrains the round.
  std::vector<std::pair<int, std::optional<Rational>>> per_issue_factor;
  Rational factor;  // the common scaling factor of the round, in (0, 1]
  /// Award added to each active claimant this round, claimant-indexed
  /// (zero for non-active claimants).
  std::vector<Rational> increments;
  /// Cumulative fraction of the original claim paid to claimants that have
  /// been active through this round: 1 - prod_{h<=s} (1 - factor_h).
  Rational rho_after;
  std::vector<int> deactivated_issues;
  std::vector<std::pair<int, DeactivationCause>> deactivated_claimants;
};

/// Complete audit trail of one CPA run. Self-contained: carries the id
/// vectors so it can be exported without the problem at hand.
struct Trace {
  std::vector<std::string> issue_ids;
  std::vector<std::string> claimant_ids;
  std::vector<StepRecord> steps;
  Allocation final_allocation;
  std::vector<Rational> leftover;  // residual capacity per issue
};

/// Deactivation step per entity; nullopt marks entities still active when
/// the procedure stopped (SURVIVED). Entities that never activated (zero
/// claim, or a claimed issue empty from the start) carry step 0. Issue i1
/// strictly precedes i2 iff i1's step is defined and smaller (or i2
/// survived); equal steps are equivalent.
struct PrecedenceOrder {
  std::vector<std::optional<int>> issue_step;
  std::vector<std::optional<int>> claimant_step;
};

/// Runs the constrained proportional awards procedure: per round, all active
/// claims are scaled by the largest common factor no issue can refuse
/// (capped at 1), exhausted issues and settled or blocked claimants drop
/// out, and the loop repeats. Terminates in at most issue_count() rounds.
Trace solve_cpa(const Problem& p);

/// Connected components of the bipartite claimant-issue graph, as
/// independent subproblems in declaration order. Solving the parts and
/// concatenating equals solving the whole.
std::vector<Problem> decompose(const Problem& p);

PrecedenceOrder precedence_order(const Trace& t);

/// The strictly increasing sequence rho_1 < ... < rho_r <= 1 of cumulative
/// claim fractions, one entry per step.
std::vector<Rational> rho_sequence(const Trace& t);

}  // namespace mac
