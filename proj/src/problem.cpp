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

#include "mac/problem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mac {

namespace {

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error([&report] {
        std::ostringstream os;
        os << "invalid problem:";
        for (const auto& e : report.errors) os << " [" << e.code << "] " << e.message;
        return os.str();
      }()),
      report_(std::move(report)) {}

ValidationReport Problem::check(const ProblemData& raw) {
  ValidationReport rep;
  auto error = [&rep](std::string code, std::string msg) {
    rep.errors.push_back({std::move(code), std::move(msg)});
  };

  std::map<std::string_view, int> issue_idx;
  for (int i = 0; i < static_cast<int>(raw.issues.size()); ++i) {
    const Issue& is = raw.issues[i];
    if (is.id.empty()) error("validate/empty-id", "issue with empty id");
    if (!issue_idx.emplace(is.id, i).second)
      error("validate/duplicate-issue-id", "issue id " + quoted(is.id) + " declared twice");
    if (is.amount.is_negative())
      error("validate/negative-amount", "issue " + quoted(is.id) + " has negative amount");
  }

  std::set<std::string_view> claimant_ids;
  std::vector<Rational> totals(raw.issues.size());
  for (const Claimant& cl : raw.claimants) {
    if (cl.id.empty()) error("validate/empty-id", "claimant with empty id");
    if (!claimant_ids.insert(cl.id).second)
      error("validate/duplicate-claimant-id", "claimant id " + quoted(cl.id) + " declared twice");
    if (cl.claim.is_negative())
      error("validate/negative-amount", "claimant " + quoted(cl.id) + " has negative claim");
    if (cl.issues.empty())
      error("validate/empty-issue-set", "claimant " + quoted(cl.id) + " claims no issues");
    std::set<int> seen;
    for (const std::string& iid : cl.issues) {
      auto it = issue_idx.find(iid);
      if (it == issue_idx.end()) {
        error("validate/unknown-issue",
              "claimant " + quoted(cl.id) + " references unknown issue " + quoted(iid));
      } else if (seen.insert(it->second).second) {
        totals[it->second] += cl.claim;
      }
    }
  }

  if (rep.ok()) {
    for (int i = 0; i < static_cast<int>(raw.issues.size()); ++i) {
      if (!(totals[i] > raw.issues[i].amount)) {
        rep.warnings.push_back(
            {"validate/non-binding-issue",
             "issue " + quoted(raw.issues[i].id) + " is not over-claimed (total claim " +
                 totals[i].str() + " <= amount " + raw.issues[i].amount.str() + ")"});
      }
    }
  }
  return rep;
}

Problem Problem::validated(ProblemData raw) {
  ValidationReport rep = check(raw);
  if (!rep.ok()) throw ValidationError(std::move(rep));

  Problem p;
  p.data_ = std::move(raw);

  std::map<std::string_view, int> issue_idx;
  for (int i = 0; i < static_cast<int>(p.data_.issues.size()); ++i)
    issue_idx.emplace(p.data_.issues[i].id, i);

  const int n = static_cast<int>(p.data_.claimants.size());
  const int m = static_cast<int>(p.data_.issues.size());
  p.issue_sets_.resize(n);
  p.claimants_of_.resize(m);
  p.totals_.assign(m, Rational(0));

  for (int j = 0; j < n; ++j) {
    Claimant& cl = p.data_.claimants[j];
    std::set<int> s;
    for (const std::string& iid : cl.issues) s.insert(issue_idx.at(iid));
    p.issue_sets_[j].assign(s.begin(), s.end());
    // Canonical document form: claim sets in issue declaration order,
    // duplicates dropped.
    cl.issues.clear();
    for (int i : p.issue_sets_[j]) {
      cl.issues.push_back(p.data_.issues[i].id);
      p.claimants_of_[i].push_back(j);
      p.totals_[i] += cl.claim;
    }
  }

  p.binding_ = true;
  for (int i = 0; i < m; ++i)
    if (!(p.totals_[i] > p.data_.issues[i].amount)) p.binding_ = false;
  return p;
}

std::optional<int> Problem::issue_index(std::string_view id) const {
  for (int i = 0; i < issue_count(); ++i)
    if (data_.issues[i].id == id) return i;
  return std::nullopt;
}

std::optional<int> Problem::claimant_index(std::string_view id) const {
  for (int j = 0; j < claimant_count(); ++j)
    if (data_.claimants[j].id == id) return j;
  return std::nullopt;
}

Allocation::Allocation(const Problem& p, std::vector<Rational> amounts)
    : amounts_(std::move(amounts)) {
  if (static_cast<int>(amounts_.size()) != p.claimant_count())
    throw std::invalid_argument("allocation: wrong number of awards");
  ids_.reserve(p.claimant_count());
  for (const Claimant& cl : p.claimants()) ids_.push_back(cl.id);
}

Allocation Allocation::zero(const Problem& p) {
  return Allocation(p, std::vector<Rational>(p.claimant_count(), Rational(0)));
}

const Rational* Allocation::find(std::string_view id) const {
  for (int j = 0; j < size(); ++j)
    if (ids_[j] == id) return &amounts_[j];
  return nullptr;
}

Rational Allocation::total() const {
  Rational t;
  for (const Rational& a : amounts_) t += a;
  return t;
}

ValidationReport validate_problem(const ProblemData& raw) { return Problem::check(raw); }

NormalizeResult normalize(const Problem& p) {
  std::vector<bool> keep_issue(p.issue_count());
  std::vector<std::string> removed;
  for (int i = 0; i < p.issue_count(); ++i) {
    keep_issue[i] = p.total_claim_on(i) > p.issue(i).amount;
    if (!keep_issue[i]) removed.push_back(p.issue(i).id);
  }

  ProblemData out;
  for (int i = 0; i < p.issue_count(); ++i)
    if (keep_issue[i]) out.issues.push_back(p.issue(i));

  std::vector<std::pair<std::string, Rational>> released;
  for (int j = 0; j < p.claimant_count(); ++j) {
    Claimant cl = p.claimant(j);
    std::erase_if(cl.issues, [&](const std::string& iid) {
      return !keep_issue[*p.issue_index(iid)];
    });
    if (cl.issues.empty())
      released.emplace_back(cl.id, cl.claim);
    else
      out.claimants.push_back(std::move(cl));
  }

  // Dropping a slack issue never changes any surviving issue's total claim,
  // so one pass reaches the fixed point.
  return NormalizeResult{Problem::validated(std::move(out)), std::move(removed),
                         std::move(released)};
}

bool is_feasible(const Problem& p, const Allocation& x) {
  if (x.size() != p.claimant_count())
    throw std::invalid_argument("allocation/claimant set mismatch");
  for (int j = 0; j < p.claimant_count(); ++j) {
    if (x.ids()[j] != p.claimant(j).id)
      throw std::invalid_argument("allocation/claimant set mismatch");
    if (x[j].is_negative() || x[j] > p.claimant(j).claim) return false;
  }
  for (int i = 0; i < p.issue_count(); ++i) {
    Rational used;
    for (int j : p.claimants_of(i)) used += x[j];
    if (used > p.issue(i).amount) return false;
  }
  return true;
}

std::optional<int> find_improvable(const Problem& p, const Allocation& x) {
  std::vector<Rational> used(p.issue_count());
  for (int i = 0; i < p.issue_count(); ++i)
    for (int j : p.claimants_of(i)) used[i] += x[j];

  for (int j = 0; j < p.claimant_count(); ++j) {
    if (!(x[j] < p.claimant(j).claim)) continue;
    bool all_slack = true;
    for (int i : p.issue_set(j)) {
      if (!(used[i] < p.issue(i).amount)) {
        all_slack = false;
        break;
      }
    }
    if (all_slack) return j;
  }
  return std::nullopt;
}

bool is_pareto_efficient(const Problem& p, const Allocation& x) {
  if (!is_feasible(p, x))
    throw std::invalid_argument("pareto test requires a feasible allocation");
  return !find_improvable(p, x).has_value();
}

ClaimantComparison are_equal(const Problem& p, std::string_view j, std::string_view k) {
  auto ji = p.claimant_index(j), ki = p.claimant_index(k);
  if (!ji || !ki) throw std::invalid_argument("unknown claimant id");
  ClaimantComparison c;
  c.homologous = p.issue_set(*ji) == p.issue_set(*ki);
  c.equal = c.homologous && p.claimant(*ji).claim == p.claimant(*ki).claim;
  return c;
}

}  // namespace mac
