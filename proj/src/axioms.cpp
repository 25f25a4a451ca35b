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

#include "mac/axioms.hpp"

#include <map>
#include <sstream>

namespace mac {

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  if (name == "peff") return AxiomId::kPeff;
  if (name == "ete") return AxiomId::kEte;
  if (name == "gma") return AxiomId::kGma;
  if (name == "cons") return AxiomId::kCons;
  if (name == "nms") return AxiomId::kNms;
  if (name == "nmrm") return AxiomId::kNmrm;
  return std::nullopt;
}

std::string axiom_name(AxiomId a) {
  switch (a) {
    case AxiomId::kPeff: return "peff";
    case AxiomId::kEte: return "ete";
    case AxiomId::kGma: return "gma";
    case AxiomId::kCons: return "cons";
    case AxiomId::kNms: return "nms";
    case AxiomId::kNmrm: return "nmrm";
  }
  return "?";
}

namespace {

Witness base_witness(const Rule& rule, AxiomId axiom, const Problem& p) {
  Witness w;
  w.rule = rule.name();
  w.priority_order = rule.priority_order();
  w.rule_reconstructed = rule.reconstructed();
  w.axiom = axiom;
  w.problem = p.data();
  return w;
}

AxiomVerdict contract_failure(const Rule& rule, AxiomId axiom, const Problem& p,
                              Allocation x, std::string where) {
  AxiomVerdict v{axiom, VerdictStatus::kRuleContract};
  Witness w = base_witness(rule, axiom, p);
  w.original = std::move(x);
  w.detail = "rule returned an infeasible allocation on " + where;
  v.witness = std::move(w);
  return v;
}

/// Runs the rule and screens its contract; on success stores the allocation.
bool run_checked(const Rule& rule, AxiomId axiom, const Problem& p,
                 std::optional<Allocation>& out, AxiomVerdict& verdict,
                 const std::string& where) {
  Allocation x = rule.allocate(p);
  if (!is_feasible(p, x)) {
    verdict = contract_failure(rule, axiom, p, std::move(x), where);
    return false;
  }
  out = std::move(x);
  return true;
}

}  // namespace

AxiomVerdict check_peff(const Rule& rule, const Problem& p) {
  AxiomVerdict v{AxiomId::kPeff};
  std::optional<Allocation> x;
  if (!run_checked(rule, AxiomId::kPeff, p, x, v, "the problem")) return v;

  if (auto j = find_improvable(p, *x)) {
    v.status = VerdictStatus::kViolated;
    Witness w = base_witness(rule, AxiomId::kPeff, p);
    w.original = *x;
    w.violating_claimant = p.claimant(*j).id;
    w.detail = "claimant " + p.claimant(*j).id + " (award " + (*x)[*j].str() +
               ", claim " + p.claimant(*j).claim.str() +
               ") can be raised without breaking feasibility";
    v.witness = std::move(w);
  }
  return v;
}

AxiomVerdict check_ete(const Rule& rule, const Problem& p) {
  AxiomVerdict v{AxiomId::kEte};
  std::optional<Allocation> x;
  if (!run_checked(rule, AxiomId::kEte, p, x, v, "the problem")) return v;

  std::map<std::vector<int>, std::vector<int>> by_set;
  for (int j = 0; j < p.claimant_count(); ++j) by_set[p.issue_set(j)].push_back(j);

  for (const auto& [set, members] : by_set) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        int j = members[a], k = members[b];
        if (p.claimant(j).claim != p.claimant(k).claim) continue;
        if ((*x)[j] == (*x)[k]) continue;
        v.status = VerdictStatus::kViolated;
        Witness w = base_witness(rule, AxiomId::kEte, p);
        w.original = *x;
        w.violating_claimant = p.claimant(j).id;
        w.detail = "equal claimants " + p.claimant(j).id + " and " + p.claimant(k).id +
                   " received " + (*x)[j].str() + " and " + (*x)[k].str();
        v.witness = std::move(w);
        return v;
      }
    }
  }
  return v;
}

AxiomVerdict check_gma(const Rule& rule, const Problem& p) {
  AxiomVerdict v{AxiomId::kGma};
  std::optional<Allocation> x;
  if (!run_checked(rule, AxiomId::kGma, p, x, v, "the problem")) return v;

  for (int j = 0; j < p.claimant_count(); ++j) {
    Rational floor;
    int floor_issue = -1;
    std::optional<Allocation> floor_alloc;
    for (int i : p.issue_set(j)) {
      ProblemData sub;
      sub.issues.push_back(p.issue(i));
      std::vector<std::string> kept;
      for (int k : p.claimants_of(i)) {
        sub.claimants.push_back({p.claimant(k).id, p.claimant(k).claim, {p.issue(i).id}});
        kept.push_back(p.claimant(k).id);
      }
      Problem single = Problem::validated(std::move(sub));
      Allocation y = rule.restricted_to(p, kept)->allocate(single);
      if (!is_feasible(single, y))
        return contract_failure(rule, AxiomId::kGma, p, std::move(y),
                                "the single-issue subproblem of " + p.issue(i).id);
      const Rational* share = y.find(p.claimant(j).id);
      if (floor_issue < 0 || *share < floor) {
        floor = *share;
        floor_issue = i;
        floor_alloc = std::move(y);
      }
    }
    if ((*x)[j] < floor) {
      v.status = VerdictStatus::kViolated;
      Witness w = base_witness(rule, AxiomId::kGma, p);
      w.original = *x;
      w.transformed = std::move(floor_alloc);
      w.violating_claimant = p.claimant(j).id;
      w.detail = "claimant " + p.claimant(j).id + " received " + (*x)[j].str() +
                 ", below its guaranteed minimum " + floor.str() +
                 " (single-issue award on " + p.issue(floor_issue).id + ")";
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

AxiomVerdict check_cons(const Rule& rule, const Problem& p,
                        std::span<const SubsetSpec> specs) {
  AxiomVerdict v{AxiomId::kCons};
  std::optional<Allocation> x;
  if (!run_checked(rule, AxiomId::kCons, p, x, v, "the problem")) return v;

  for (const SubsetSpec& spec : specs) {
    Problem reduced = reduce_problem(p, *x, spec);
    if (!reduced.binding()) {
      std::ostringstream os;
      os << "reduced problem for {";
      for (std::size_t i = 0; i < spec.keep.size(); ++i)
        os << (i ? "," : "") << spec.keep[i];
      os << "} has non-binding issues; evaluated as-is";
      v.notes.push_back(os.str());
    }
    Allocation y = rule.restricted_to(p, spec.keep)->allocate(reduced);
    if (!is_feasible(reduced, y))
      return contract_failure(rule, AxiomId::kCons, p, std::move(y), "a reduced problem");

    for (const std::string& id : spec.keep) {
      const Rational* before = x->find(id);
      const Rational* after = y.find(id);
      if (*before == *after) continue;
      v.status = VerdictStatus::kViolated;
      Witness w = base_witness(rule, AxiomId::kCons, p);
      w.transformation = spec;
      w.original = *x;
      w.transformed = std::move(y);
      w.violating_claimant = id;
      w.detail = "claimant " + id + " received " + before->str() +
                 " originally but " + after->str() + " in the reduced problem";
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

AxiomVerdict check_nms(const Rule& rule, const Problem& p,
                       std::span<const SplitSpec> specs) {
  AxiomVerdict v{AxiomId::kNms};
  std::optional<Allocation> x;
  if (!run_checked(rule, AxiomId::kNms, p, x, v, "the problem")) return v;

  for (const SplitSpec& spec : specs) {
    Problem split = split_problem(p, spec);
    Allocation y = rule.after_split(p, spec)->allocate(split);
    if (!is_feasible(split, y))
      return contract_failure(rule, AxiomId::kNms, p, std::move(y), "a split problem");

    Rational family;
    for (const auto& [id, claim] : spec.parts) family += *y.find(id);
    const Rational* before = x->find(spec.target);
    if (family == *before) continue;

    v.status = VerdictStatus::kViolated;
    Witness w = base_witness(rule, AxiomId::kNms, p);
    w.transformation = spec;
    w.original = *x;
    w.transformed = std::move(y);
    w.violating_claimant = spec.target;
    w.detail = "claimant " + spec.target + " received " + before->str() +
               " but its parts total " + family.str() + " after splitting";
    v.witness = std::move(w);
    return v;
  }
  return v;
}

AxiomVerdict check_nmrm(const Rule& rule, const Problem& p,
                        std::span<const MergeSpec> specs) {
  AxiomVerdict v{AxiomId::kNmrm};
  std::optional<Allocation> x;
  if (!run_checked(rule, AxiomId::kNmrm, p, x, v, "the problem")) return v;

  for (const MergeSpec& spec : specs) {
    Problem merged = merge_problem(p, spec);
    Allocation y = rule.after_merge(p, spec)->allocate(merged);
    if (!is_feasible(merged, y))
      return contract_failure(rule, AxiomId::kNmrm, p, std::move(y), "a merged problem");

    Rational family;
    for (const std::string& id : spec.sources) family += *x->find(id);
    const Rational* after = y.find(spec.merged_id);
    if (*after == family) continue;

    v.status = VerdictStatus::kViolated;
    Witness w = base_witness(rule, AxiomId::kNmrm, p);
    w.transformation = spec;
    w.original = *x;
    w.transformed = std::move(y);
    w.violating_claimant = spec.merged_id;
    w.detail = "sources total " + family.str() + " but the merged claimant " +
               spec.merged_id + " received " + after->str();
    v.witness = std::move(w);
    return v;
  }
  return v;
}

bool reverify_witness(const Rule& rule, const Witness& w) {
  Problem p = Problem::validated(w.problem);
  AxiomVerdict v;
  if (const auto* s = std::get_if<SubsetSpec>(&w.transformation)) {
    v = check_cons(rule, p, std::span(s, 1));
  } else if (const auto* s = std::get_if<SplitSpec>(&w.transformation)) {
    v = check_nms(rule, p, std::span(s, 1));
  } else if (const auto* s = std::get_if<MergeSpec>(&w.transformation)) {
    v = check_nmrm(rule, p, std::span(s, 1));
  } else {
    switch (w.axiom) {
      case AxiomId::kPeff: v = check_peff(rule, p); break;
      case AxiomId::kEte: v = check_ete(rule, p); break;
      case AxiomId::kGma: v = check_gma(rule, p); break;
      default:
        return false;  // transformation axiom recorded without its spec
    }
  }
  return !v.holds();
}

}  // namespace mac
