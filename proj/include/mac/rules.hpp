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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mac/problem.hpp"
#include "mac/transforms.hpp"

namespace mac {

enum class RuleKind {
  kCpa,
  kPropSingle,
  kNull,
  kPriority,
  kTwoPhase,
  kTwoStep,
  kCeaMac,
};

/// Proportional rule for one-issue problems: each claimant receives the
/// fraction e / sum(c) of its claim, capped at full reimbursement when the
/// issue is not binding. Throws std::invalid_argument on multi-issue input.
Allocation solve_prop_single(const Problem& p);

/// Awards zero to everyone.
Allocation solve_null(const Problem& p);

/// Serves claimants in the given order; each takes the minimum of its claim
/// and the tightest remaining capacity among its issues. `order` must be a
/// permutation of the claimant ids.
Allocation solve_priority(const Problem& p, const std::vector<std::string>& order);

/// Phase 1 splits every issue proportionally among the claimants that claim
/// only that issue (full reimbursement when it suffices); phase 2 runs the
/// constrained proportional awards procedure for the remaining claimants on
/// the leftover capacities.
Allocation solve_two_phase(const Problem& p);

/// First pays every claimant the worst of its per-issue proportional shares,
/// then sweeps the issues from the smallest leftover capacity upward,
/// repeatedly scaling the residual claims of each issue's unblocked
/// claimants by the largest feasible common factor until the issue empties
/// or nobody on it can still receive.
Allocation solve_two_step(const Problem& p);

/// Egalitarian counterpart of the constrained proportional procedure,
/// reconstructed from its one-line description in follow-up work: per round
/// every active claimant receives the same increment, chosen as the largest
/// amount every issue and every residual claim can absorb. Outputs carry a
/// "reconstructed" flag downstream.
Allocation solve_cea_mac(const Problem& p);

/// A rule is a total deterministic map from problems to feasible
/// allocations. Axiom checkers transform problems (reduce, split, merge);
/// parametric rules override the hooks below so their parameters transform
/// along (the priority order must follow its claimants). Instances are
/// always held by shared_ptr; the stateless default hooks return the rule
/// itself.
class Rule : public std::enable_shared_from_this<Rule> {
 public:
  virtual ~Rule() = default;

  virtual RuleKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual Allocation allocate(const Problem& p) const = 0;

  /// True for rules rebuilt from a citation rather than a full definition.
  virtual bool reconstructed() const { return false; }

  /// The claimant order for order-parametric rules; nullopt otherwise.
  virtual std::optional<std::vector<std::string>> priority_order() const {
    return std::nullopt;
  }

  virtual std::shared_ptr<const Rule> restricted_to(
      const Problem& original, const std::vector<std::string>& kept) const;
  virtual std::shared_ptr<const Rule> after_split(const Problem& original,
                                                  const SplitSpec& spec) const;
  virtual std::shared_ptr<const Rule> after_merge(const Problem& original,
                                                  const MergeSpec& spec) const;

 protected:
  Rule() = default;
};

using RulePtr = std::shared_ptr<const Rule>;

/// make_rule(kPriority) serves claimants in declaration order;
/// make_priority_rule pins an explicit order instead.
RulePtr make_rule(RuleKind kind);
RulePtr make_priority_rule(std::vector<std::string> order);

/// CLI names: cpa, prop, null, priority, two-phase, two-step, cea.
std::optional<RuleKind> rule_kind_from_name(std::string_view name);
std::string rule_name(RuleKind kind);

}  // namespace mac
