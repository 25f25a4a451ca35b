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

#include "mac/cpa.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace mac {

namespace {

struct ActiveSets {
  std::vector<bool> issue;     // capacity still positive
  std::vector<bool> claimant;  // positive residual claim, all claimed issues positive
  int issues_alive = 0;
  int claimants_alive = 0;
};

ActiveSets recompute_active(const Problem& p, const std::vector<Rational>& cap,
                            const std::vector<Rational>& claim) {
  ActiveSets a;
  a.issue.resize(p.issue_count());
  a.claimant.resize(p.claimant_count());
  for (int i = 0; i < p.issue_count(); ++i) {
    a.issue[i] = cap[i].is_positive();
    if (a.issue[i]) ++a.issues_alive;
  }
  for (int j = 0; j < p.claimant_count(); ++j) {
    bool act = claim[j].is_positive();
    for (int i : p.issue_set(j))
      if (!a.issue[i]) { act = false; break; }
    a.claimant[j] = act;
    if (act) ++a.claimants_alive;
  }
  return a;
}

}  // namespace

Trace solve_cpa(const Problem& p) {
  const int m = p.issue_count();
  const int n = p.claimant_count();

  std::vector<Rational> cap(m), claim(n), awarded(n);
  for (int i = 0; i < m; ++i) cap[i] = p.issue(i).amount;
  for (int j = 0; j < n; ++j) claim[j] = p.claimant(j).claim;

  std::vector<StepRecord> steps;
  Rational survive(1);  // prod (1 - factor_h)

  if (m > 0 || n > 0) {
    ActiveSets act = recompute_active(p, cap, claim);
    for (int s = 1;; ++s) {
      // The round factor is the largest lambda <= 1 with
      // lambda * demand_i <= cap_i for every active issue.
      std::vector<Rational> demand(m);
      for (int j = 0; j < n; ++j)
        if (act.claimant[j])
          for (int i : p.issue_set(j)) demand[i] += claim[j];

      StepRecord rec;
      rec.index = s;
      Rational factor(1);
      for (int i = 0; i < m; ++i) {
        if (!act.issue[i]) continue;
        rec.active_issues.push_back(i);
        if (demand[i].is_positive()) {
          Rational li = cap[i] / demand[i];
          if (li < factor) factor = li;
          rec.per_issue_factor.emplace_back(i, std::move(li));
        } else {
          rec.per_issue_factor.emplace_back(i, std::nullopt);
        }
      }
      rec.factor = factor;
      rec.increments.assign(n, Rational(0));
      for (int j = 0; j < n; ++j) {
        if (!act.claimant[j]) continue;
        rec.active_claimants.push_back(j);
        rec.increments[j] = factor * claim[j];
        awarded[j] += rec.increments[j];
      }

      // Awards and updates range over active entities only; residual claims
      // of blocked claimants stay frozen.
      for (int i = 0; i < m; ++i)
        if (act.issue[i] && demand[i].is_positive()) cap[i] -= factor * demand[i];
      Rational keep = Rational(1) - factor;
      for (int j : rec.active_claimants) claim[j] *= keep;

      survive *= keep;
      rec.rho_after = Rational(1) - survive;

      ActiveSets next = recompute_active(p, cap, claim);
      for (int i : rec.active_issues)
        if (!next.issue[i]) rec.deactivated_issues.push_back(i);
      for (int j : rec.active_claimants) {
        if (!next.claimant[j])
          rec.deactivated_claimants.emplace_back(
              j, claim[j].is_zero() ? DeactivationCause::kClaimExhausted
                                    : DeactivationCause::kIssueExhausted);
      }
      steps.push_back(std::move(rec));

      if (factor == Rational(1)) break;
      if (next.issues_alive == 0 || next.claimants_alive == 0) break;
      act = std::move(next);
      // Every round with factor < 1 exhausts at least one issue, so the
      // loop runs at most m times before one of the exits above fires.
      assert(s <= m + 1);
    }
  }

  Trace t{{}, {}, std::move(steps), Allocation(p, std::move(awarded)), std::move(cap)};
  t.issue_ids.reserve(m);
  for (const Issue& is : p.issues()) t.issue_ids.push_back(is.id);
  t.claimant_ids.reserve(n);
  for (const Claimant& cl : p.claimants()) t.claimant_ids.push_back(cl.id);
  return t;
}

std::vector<Problem> decompose(const Problem& p) {
  const int m = p.issue_count();
  const int n = p.claimant_count();

  // Union-find over issues [0, m) and claimants [m, m + n).
  std::vector<int> parent(m + n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int j = 0; j < n; ++j)
    for (int i : p.issue_set(j)) parent[root(m + j)] = root(i);

  // Components ordered by first appearance among issues, then claimants.
  std::vector<int> comp_of(m + n, -1);
  int comps = 0;
  for (int v = 0; v < m + n; ++v) {
    int r = root(v);
    if (comp_of[r] < 0) comp_of[r] = comps++;
    comp_of[v] = comp_of[r];
  }

  std::vector<ProblemData> parts(comps);
  for (int i = 0; i < m; ++i) parts[comp_of[i]].issues.push_back(p.issue(i));
  for (int j = 0; j < n; ++j) parts[comp_of[m + j]].claimants.push_back(p.claimant(j));

  std::vector<Problem> out;
  out.reserve(comps);
  for (ProblemData& d : parts) out.push_back(Problem::validated(std::move(d)));
  return out;
}

PrecedenceOrder precedence_order(const Trace& t) {
  PrecedenceOrder o;
  // Entities that never entered the first active set were out before the
  // procedure started; they carry step 0 and precede everything.
  o.issue_step.assign(t.issue_ids.size(), std::optional<int>(0));
  o.claimant_step.assign(t.claimant_ids.size(), std::optional<int>(0));
  if (t.steps.empty()) return o;
  for (int i : t.steps.front().active_issues) o.issue_step[i] = std::nullopt;
  for (int j : t.steps.front().active_claimants) o.claimant_step[j] = std::nullopt;
  for (const StepRecord& s : t.steps) {
    for (int i : s.deactivated_issues) o.issue_step[i] = s.index;
    for (const auto& [j, cause] : s.deactivated_claimants) o.claimant_step[j] = s.index;
  }
  return o;
}

std::vector<Rational> rho_sequence(const Trace& t) {
  std::vector<Rational> rho;
  rho.reserve(t.steps.size());
  for (const StepRecord& s : t.steps) rho.push_back(s.rho_after);
  return rho;
}

}  // namespace mac
