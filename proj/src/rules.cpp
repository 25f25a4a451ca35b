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

#include "mac/rules.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mac/cpa.hpp"

namespace mac {

Allocation solve_prop_single(const Problem& p) {
  if (p.issue_count() != 1)
    throw std::invalid_argument("prop: defined for one-issue problems only");
  const Rational& e = p.issue(0).amount;
  Rational total = p.total_claim_on(0);
  std::vector<Rational> x(p.claimant_count());
  if (total.is_positive()) {
    Rational f = min(Rational(1), e / total);
    for (int j = 0; j < p.claimant_count(); ++j) x[j] = f * p.claimant(j).claim;
  }
  return Allocation(p, std::move(x));
}

Allocation solve_null(const Problem& p) { return Allocation::zero(p); }

Allocation solve_priority(const Problem& p, const std::vector<std::string>& order) {
  if (static_cast<int>(order.size()) != p.claimant_count())
    throw std::invalid_argument("priority: order is not a permutation of the claimants");
  std::vector<bool> seen(p.claimant_count(), false);

  std::vector<Rational> rem(p.issue_count());
  for (int i = 0; i < p.issue_count(); ++i) rem[i] = p.issue(i).amount;

  std::vector<Rational> x(p.claimant_count());
  for (const std::string& id : order) {
    auto j = p.claimant_index(id);
    if (!j || seen[*j])
      throw std::invalid_argument("priority: order is not a permutation of the claimants");
    seen[*j] = true;
    Rational take = p.claimant(*j).claim;
    for (int i : p.issue_set(*j)) take = min(take, rem[i]);
    if (take.is_negative()) take = Rational(0);
    x[*j] = take;
    for (int i : p.issue_set(*j)) rem[i] -= take;
  }
  return Allocation(p, std::move(x));
}

Allocation solve_two_phase(const Problem& p) {
  std::vector<Rational> x(p.claimant_count());
  std::vector<Rational> rem(p.issue_count());
  for (int i = 0; i < p.issue_count(); ++i) rem[i] = p.issue(i).amount;

  // Phase 1: exclusive claimants of each issue share it proportionally.
  std::vector<bool> exclusive(p.claimant_count());
  for (int j = 0; j < p.claimant_count(); ++j)
    exclusive[j] = p.issue_set(j).size() == 1;

  for (int i = 0; i < p.issue_count(); ++i) {
    Rational demand;
    for (int j : p.claimants_of(i))
      if (exclusive[j]) demand += p.claimant(j).claim;
    if (!demand.is_positive()) continue;
    Rational f = min(Rational(1), rem[i] / demand);
    for (int j : p.claimants_of(i)) {
      if (!exclusive[j]) continue;
      x[j] = f * p.claimant(j).claim;
      rem[i] -= x[j];
    }
  }

  // Phase 2: everyone claiming two or more issues, on the leftovers.
  ProblemData rest;
  for (int i = 0; i < p.issue_count(); ++i) rest.issues.push_back({p.issue(i).id, rem[i]});
  for (int j = 0; j < p.claimant_count(); ++j)
    if (!exclusive[j]) rest.claimants.push_back(p.claimant(j));

  if (!rest.claimants.empty()) {
    Problem sub = Problem::validated(std::move(rest));
    Allocation y = solve_cpa(sub).final_allocation;
    for (int j = 0; j < p.claimant_count(); ++j)
      if (const Rational* a = y.find(p.claimant(j).id)) x[j] += *a;
  }
  return Allocation(p, std::move(x));
}

namespace {

/// Worst per-issue proportional share of claimant j: its guaranteed minimum.
Rational proportional_floor(const Problem& p, int j) {
  Rational floor;
  bool first = true;
  for (int i : p.issue_set(j)) {
    const Rational& total = p.total_claim_on(i);
    Rational share;
    if (total.is_positive())
      share = min(Rational(1), p.issue(i).amount / total) * p.claimant(j).claim;
    if (first || share < floor) {
      floor = std::move(share);
      first = false;
    }
  }
  return floor;
}

}  // namespace

Allocation solve_two_step(const Problem& p) {
  const int m = p.issue_count();
  const int n = p.claimant_count();

  // Step 1: pay the guaranteed minimum. Each floor is bounded by every one
  // of the claimant's per-issue proportional shares, and those shares sum to
  // at most the issue amount, so the floors are always jointly feasible.
  std::vector<Rational> x(n), resid(n), rem(m);
  for (int i = 0; i < m; ++i) rem[i] = p.issue(i).amount;
  for (int j = 0; j < n; ++j) {
    x[j] = proportional_floor(p, j);
    resid[j] = p.claimant(j).claim - x[j];
    assert(!resid[j].is_negative());
    for (int i : p.issue_set(j)) rem[i] -= x[j];
  }
  for (int i = 0; i < m; ++i) assert(!rem[i].is_negative());

  // Step 2: sweep issues from the smallest leftover upward. An issue keeps
  // receiving proportional rounds until it empties or none of its claimants
  // can take more (settled, or blocked by an empty issue elsewhere).
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&rem](int a, int b) { return rem[a] < rem[b]; });

  for (int i : order) {
    while (rem[i].is_positive()) {
      std::vector<int> round;
      for (int j : p.claimants_of(i)) {
        if (!resid[j].is_positive()) continue;
        bool blocked = false;
        for (int k : p.issue_set(j))
          if (!rem[k].is_positive()) { blocked = true; break; }
        if (!blocked) round.push_back(j);
      }
      if (round.empty()) break;

      std::vector<Rational> demand(m);
      for (int j : round)
        for (int k : p.issue_set(j)) demand[k] += resid[j];
      Rational f(1);
      for (int k = 0; k < m; ++k) {
        if (!demand[k].is_positive()) continue;
        Rational fk = rem[k] / demand[k];
        if (fk < f) f = std::move(fk);
      }
      for (int j : round) {
        Rational inc = f * resid[j];
        x[j] += inc;
        resid[j] -= inc;
      }
      for (int k = 0; k < m; ++k)
        if (demand[k].is_positive()) rem[k] -= f * demand[k];
      if (f == Rational(1)) break;  // everyone in the round is settled
    }
  }
  return Allocation(p, std::move(x));
}

Allocation solve_cea_mac(const Problem& p) {
  const int m = p.issue_count();
  const int n = p.claimant_count();

  std::vector<Rational> cap(m), claim(n), x(n);
  for (int i = 0; i < m; ++i) cap[i] = p.issue(i).amount;
  for (int j = 0; j < n; ++j) claim[j] = p.claimant(j).claim;

  // Same active-set discipline as the proportional procedure, equal
  // increments instead of proportional ones. Every round exhausts an issue
  // or a claim, so it ends within m + n rounds.
  for (int guard = 0; guard <= m + n; ++guard) {
    std::vector<bool> issue_active(m);
    for (int i = 0; i < m; ++i) issue_active[i] = cap[i].is_positive();

    std::vector<int> active;
    std::vector<int> load(m, 0);
    Rational delta;
    bool any = false;
    for (int j = 0; j < n; ++j) {
      if (!claim[j].is_positive()) continue;
      bool blocked = false;
      for (int i : p.issue_set(j))
        if (!issue_active[i]) { blocked = true; break; }
      if (blocked) continue;
      active.push_back(j);
      for (int i : p.issue_set(j)) ++load[i];
      if (!any || claim[j] < delta) delta = claim[j];
      any = true;
    }
    if (!any) break;
    for (int i = 0; i < m; ++i) {
      if (load[i] == 0) continue;
      Rational di = cap[i] / Rational(load[i]);
      if (di < delta) delta = std::move(di);
    }

    for (int j : active) {
      x[j] += delta;
      claim[j] -= delta;
    }
    for (int i = 0; i < m; ++i)
      if (load[i] > 0) cap[i] -= delta * Rational(load[i]);
  }
  return Allocation(p, std::move(x));
}

namespace {

class CpaRule final : public Rule {
 public:
  RuleKind kind() const override { return RuleKind::kCpa; }
  std::string name() const override { return "cpa"; }
  Allocation allocate(const Problem& p) const override {
    return solve_cpa(p).final_allocation;
  }
};

class PropSingleRule final : public Rule {
 public:
  RuleKind kind() const override { return RuleKind::kPropSingle; }
  std::string name() const override { return "prop"; }
  Allocation allocate(const Problem& p) const override { return solve_prop_single(p); }
};

class NullRule final : public Rule {
 public:
  RuleKind kind() const override { return RuleKind::kNull; }
  std::string name() const override { return "null"; }
  Allocation allocate(const Problem& p) const override { return solve_null(p); }
};

class TwoPhaseRule final : public Rule {
 public:
  RuleKind kind() const override { return RuleKind::kTwoPhase; }
  std::string name() const override { return "two-phase"; }
  Allocation allocate(const Problem& p) const override { return solve_two_phase(p); }
};

class TwoStepRule final : public Rule {
 public:
  RuleKind kind() const override { return RuleKind::kTwoStep; }
  std::string name() const override { return "two-step"; }
  Allocation allocate(const Problem& p) const override { return solve_two_step(p); }
};

class CeaMacRule final : public Rule {
 public:
  RuleKind kind() const override { return RuleKind::kCeaMac; }
  std::string name() const override { return "cea"; }
  bool reconstructed() const override { return true; }
  Allocation allocate(const Problem& p) const override { return solve_cea_mac(p); }
};

// With an explicit order, the order follows the claimants through every
// transformation: departures drop out, split parts stand contiguously where
// the parent stood (by id), and merged claimants stand where the merge
// target stood. Without one, claimants are served in declaration order; the
// transformations already place kept, split and merged claimants exactly
// where the adapted order would, so the rule carries over unchanged.
class PriorityRule final : public Rule {
 public:
  PriorityRule() = default;
  explicit PriorityRule(std::vector<std::string> order) : order_(std::move(order)) {}

  RuleKind kind() const override { return RuleKind::kPriority; }
  std::string name() const override { return "priority"; }
  Allocation allocate(const Problem& p) const override {
    if (order_) return solve_priority(p, *order_);
    std::vector<std::string> declaration;
    for (const Claimant& cl : p.claimants()) declaration.push_back(cl.id);
    return solve_priority(p, declaration);
  }
  std::optional<std::vector<std::string>> priority_order() const override {
    return order_;
  }

  std::shared_ptr<const Rule> restricted_to(
      const Problem&, const std::vector<std::string>& kept) const override {
    if (!order_) return shared_from_this();
    std::set<std::string_view> keep(kept.begin(), kept.end());
    std::vector<std::string> next;
    for (const std::string& id : *order_)
      if (keep.contains(id)) next.push_back(id);
    return std::make_shared<PriorityRule>(std::move(next));
  }

  std::shared_ptr<const Rule> after_split(const Problem&,
                                          const SplitSpec& spec) const override {
    if (!order_) return shared_from_this();
    std::vector<std::string> part_ids;
    for (const auto& [id, claim] : spec.parts) part_ids.push_back(id);
    std::sort(part_ids.begin(), part_ids.end());
    std::vector<std::string> next;
    for (const std::string& id : *order_) {
      if (id == spec.target)
        next.insert(next.end(), part_ids.begin(), part_ids.end());
      else
        next.push_back(id);
    }
    return std::make_shared<PriorityRule>(std::move(next));
  }

  std::shared_ptr<const Rule> after_merge(const Problem&,
                                          const MergeSpec& spec) const override {
    if (!order_) return shared_from_this();
    std::set<std::string_view> sources(spec.sources.begin(), spec.sources.end());
    std::string_view anchor = spec.sources.front();
    if (sources.contains(spec.merged_id)) anchor = spec.merged_id;
    std::vector<std::string> next;
    for (const std::string& id : *order_) {
      if (id == anchor)
        next.push_back(spec.merged_id);
      else if (!sources.contains(id))
        next.push_back(id);
    }
    return std::make_shared<PriorityRule>(std::move(next));
  }

 private:
  std::optional<std::vector<std::string>> order_;
};

}  // namespace

std::shared_ptr<const Rule> Rule::restricted_to(const Problem&,
                                                const std::vector<std::string>&) const {
  return shared_from_this();
}
std::shared_ptr<const Rule> Rule::after_split(const Problem&, const SplitSpec&) const {
  return shared_from_this();
}
std::shared_ptr<const Rule> Rule::after_merge(const Problem&, const MergeSpec&) const {
  return shared_from_this();
}

RulePtr make_rule(RuleKind kind) {
  switch (kind) {
    case RuleKind::kCpa: return std::make_shared<CpaRule>();
    case RuleKind::kPropSingle: return std::make_shared<PropSingleRule>();
    case RuleKind::kNull: return std::make_shared<NullRule>();
    case RuleKind::kTwoPhase: return std::make_shared<TwoPhaseRule>();
    case RuleKind::kTwoStep: return std::make_shared<TwoStepRule>();
    case RuleKind::kCeaMac: return std::make_shared<CeaMacRule>();
    case RuleKind::kPriority: return std::make_shared<PriorityRule>();
  }
  throw std::logic_error("unknown rule kind");
}

RulePtr make_priority_rule(std::vector<std::string> order) {
  return std::make_shared<PriorityRule>(std::move(order));
}

std::optional<RuleKind> rule_kind_from_name(std::string_view name) {
  if (name == "cpa") return RuleKind::kCpa;
  if (name == "prop") return RuleKind::kPropSingle;
  if (name == "null") return RuleKind::kNull;
  if (name == "priority") return RuleKind::kPriority;
  if (name == "two-phase") return RuleKind::kTwoPhase;
  if (name == "two-step") return RuleKind::kTwoStep;
  if (name == "cea") return RuleKind::kCeaMac;
  return std::nullopt;
}

std::string rule_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::kCpa: return "cpa";
    case RuleKind::kPropSingle: return "prop";
    case RuleKind::kNull: return "null";
    case RuleKind::kPriority: return "priority";
    case RuleKind::kTwoPhase: return "two-phase";
    case RuleKind::kTwoStep: return "two-step";
    case RuleKind::kCeaMac: return "cea";
  }
  throw std::logic_error("unknown rule kind");
}

}  // namespace mac
