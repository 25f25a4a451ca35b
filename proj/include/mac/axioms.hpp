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
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mac/problem.hpp"
#include "mac/rules.hpp"
#include "mac/transforms.hpp"

namespace mac {

enum class AxiomId { kPeff, kEte, kGma, kCons, kNms, kNmrm };

std::optional<AxiomId> axiom_from_name(std::string_view name);
std::string axiom_name(AxiomId a);

enum class VerdictStatus {
  kHolds,
  kViolated,
  /// The rule broke its own contract (infeasible output); reported apart
  /// from axiom violations because it indicts the rule, not the axiom.
  kRuleContract,
};

/// Everything needed to re-check a failure independently of how it was
/// found: the instance, the transformation applied (if the axiom uses one),
/// and both allocations.
struct Witness {
  std::string rule;
  std::optional<std::vector<std::string>> priority_order;
  bool rule_reconstructed = false;
  AxiomId axiom = AxiomId::kPeff;
  ProblemData problem;
  std::variant<std::monostate, SubsetSpec, SplitSpec, MergeSpec> transformation;
  std::optional<Allocation> original;
  std::optional<Allocation> transformed;
  std::string violating_claimant;
  std::string detail;
};

struct AxiomVerdict {
  AxiomId axiom = AxiomId::kPeff;
  VerdictStatus status = VerdictStatus::kHolds;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
  bool holds() const { return status == VerdictStatus::kHolds; }
};

/// No feasible allocation dominates the rule's output.
AxiomVerdict check_peff(const Rule& rule, const Problem& p);

/// Claimants with identical claim sets and identical claims receive exactly
/// the same award.
AxiomVerdict check_ete(const Rule& rule, const Problem& p);

/// Every award reaches the worst of the rule's own single-issue awards over
/// the claimant's issues.
AxiomVerdict check_gma(const Rule& rule, const Problem& p);

/// For each subset, removing the other claimants with their awards leaves
/// the kept awards unchanged on the reduced problem. Reduced problems are
/// evaluated as-is; a note records when one is not strictly over-claimed.
AxiomVerdict check_cons(const Rule& rule, const Problem& p,
                        std::span<const SubsetSpec> specs);

/// Splitting a claimant never changes the family's total award.
AxiomVerdict check_nms(const Rule& rule, const Problem& p,
                       std::span<const SplitSpec> specs);

/// Merging homologous claimants never changes the family's total award.
AxiomVerdict check_nmrm(const Rule& rule, const Problem& p,
                        std::span<const MergeSpec> specs);

/// Re-runs the checker on the witness exactly as recorded; true when the
/// failure reproduces.
bool reverify_witness(const Rule& rule, const Witness& w);

}  // namespace mac
