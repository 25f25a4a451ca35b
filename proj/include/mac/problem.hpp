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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mac/rational.hpp"

namespace mac {

/// A divisible resource with a capacity.
struct Issue {
  std::string id;
  Rational amount;
};

/// A claimant holds a single claim that draws jointly on every issue in
/// `issues`.
struct Claimant {
  std::string id;
  Rational claim;
  std::vector<std::string> issues;
};

/// Unvalidated problem document, exactly as read from a file.
struct ProblemData {
  std::vector<Issue> issues;
  std::vector<Claimant> claimants;
};

struct ValidationEntry {
  std::string code;     // machine-readable, e.g. "validate/duplicate-issue-id"
  std::string message;  // human-readable detail
};

struct ValidationReport {
  std::vector<ValidationEntry> errors;    // structural, fatal
  std::vector<ValidationEntry> warnings;  // non-binding issues, fixable by normalize
  bool ok() const { return errors.empty(); }
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Structurally validated, immutable problem. Ids are unique, every claim
/// set is a non-empty subset of the declared issues, and all amounts are
/// non-negative. Strict over-claiming of every issue (the condition that
/// makes the problem a genuine claims problem) is tracked separately via
/// binding(): reduced problems arising in consistency checks legitimately
/// carry non-binding issues and every rule accepts them.
class Problem {
 public:
  /// Full validation report for a raw document; never throws.
  static ValidationReport check(const ProblemData& raw);

  /// Validates and constructs; throws ValidationError on structural errors.
  /// Non-binding issues are allowed (they appear as warnings in check()).
  static Problem validated(ProblemData raw);

  int issue_count() const { return static_cast<int>(data_.issues.size()); }
  int claimant_count() const { return static_cast<int>(data_.claimants.size()); }

  const std::vector<Issue>& issues() const { return data_.issues; }
  const std::vector<Claimant>& claimants() const { return data_.claimants; }
  const Issue& issue(int i) const { return data_.issues[i]; }
  const Claimant& claimant(int j) const { return data_.claimants[j]; }

  std::optional<int> issue_index(std::string_view id) const;
  std::optional<int> claimant_index(std::string_view id) const;

  /// Issue indices claimed by claimant j, sorted by issue declaration order.
  const std::vector<int>& issue_set(int j) const { return issue_sets_[j]; }
  /// Claimant indices claiming issue i, in claimant declaration order.
  const std::vector<int>& claimants_of(int i) const { return claimants_of_[i]; }

  /// Sum of claims over claimants_of(i).
  const Rational& total_claim_on(int i) const { return totals_[i]; }

  /// True when every issue is strictly over-claimed.
  bool binding() const { return binding_; }

  /// Canonical copy of the underlying document (claim sets listed in issue
  /// declaration order).
  const ProblemData& data() const { return data_; }

 private:
  Problem() = default;

  ProblemData data_;
  std::vector<std::vector<int>> issue_sets_;
  std::vector<std::vector<int>> claimants_of_;
  std::vector<Rational> totals_;
  bool binding_ = true;
};

/// Awards keyed by claimant id, in the claimant order of the problem they
/// were computed for. Self-contained so allocations from transformed
/// problems can be compared by id.
class Allocation {
 public:
  Allocation(const Problem& p, std::vector<Rational> amounts);
  static Allocation zero(const Problem& p);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<Rational>& amounts() const { return amounts_; }
  const Rational& operator[](int j) const { return amounts_[j]; }

  /// Award for a claimant id; nullptr when the id is absent.
  const Rational* find(std::string_view id) const;

  /// Exact total of all awards.
  Rational total() const;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.ids_ == b.ids_ && a.amounts_ == b.amounts_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<Rational> amounts_;
};

struct NormalizeResult {
  Problem problem;                    // non-binding issues removed
  std::vector<std::string> removed_issues;
  // Claimants whose claim set emptied; they face no constraint at all and
  // receive their full claim outside of any rule computation.
  std::vector<std::pair<std::string, Rational>> released_claimants;
  /// True when no issue survived (every constraint was slack).
  bool trivial() const { return problem.issue_count() == 0; }
};

/// Report every violation in a raw document. Alias of Problem::check kept as
/// a free function since callers usually don't want a Problem on failure.
ValidationReport validate_problem(const ProblemData& raw);

/// Drops every issue whose total claim does not exceed its capacity, along
/// with claimants left with no issues. Idempotent.
NormalizeResult normalize(const Problem& p);

/// 0 <= x_j <= c_j for all claimants and, for every issue, the awards of its
/// claimants sum to at most its capacity. Throws std::invalid_argument when
/// the allocation was built for a different claimant set.
bool is_feasible(const Problem& p, const Allocation& x);

/// Index of a claimant whose award can be raised without breaking
/// feasibility (claim slack and capacity slack on every claimed issue);
/// nullopt when none exists. Since constraints are monotone sums, such a
/// single-coordinate raise exists iff some feasible allocation dominates x.
std::optional<int> find_improvable(const Problem& p, const Allocation& x);

/// True iff no feasible allocation weakly dominates x with a strict gain.
/// Throws std::invalid_argument when x is infeasible.
bool is_pareto_efficient(const Problem& p, const Allocation& x);

struct ClaimantComparison {
  bool homologous = false;  // identical claim sets
  bool equal = false;       // homologous with identical claims
};

/// Compares two claimants by id; throws std::invalid_argument on unknown ids.
ClaimantComparison are_equal(const Problem& p, std::string_view j,
                             std::string_view k);

}  // namespace mac
