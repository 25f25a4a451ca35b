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

#include "mac/json_io.hpp"

#include <cstdint>

namespace mac::io {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object())
    throw SchemaError("schema/not-object", "expected an object while looking for \"" +
                                               std::string(key) + "\"");
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaError("schema/missing-field", "missing field \"" + std::string(key) + "\"");
  return *it;
}

std::string string_field(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = field(j, key);
  if (!v.is_string())
    throw SchemaError("schema/bad-type", "field \"" + std::string(key) + "\" must be a string");
  return v.get<std::string>();
}

Rational rational_field(const nlohmann::json& j, const char* key) {
  std::string text = string_field(j, key);
  auto r = Rational::parse(text);
  if (!r)
    throw SchemaError("schema/bad-rational",
                      "field \"" + std::string(key) + "\": \"" + text +
                          "\" is not an integer or p/q rational string");
  return *r;
}

const nlohmann::json& array_field(const nlohmann::json& j, const char* key) {
  const nlohmann::json& v = field(j, key);
  if (!v.is_array())
    throw SchemaError("schema/bad-type", "field \"" + std::string(key) + "\" must be an array");
  return v;
}

}  // namespace

ProblemData problem_from_json(const nlohmann::json& j) {
  ProblemData data;
  for (const nlohmann::json& e : array_field(j, "issues"))
    data.issues.push_back({string_field(e, "id"), rational_field(e, "amount")});
  for (const nlohmann::json& e : array_field(j, "claimants")) {
    Claimant cl;
    cl.id = string_field(e, "id");
    cl.claim = rational_field(e, "claim");
    for (const nlohmann::json& iid : array_field(e, "issues")) {
      if (!iid.is_string())
        throw SchemaError("schema/bad-type", "claim set entries must be strings");
      cl.issues.push_back(iid.get<std::string>());
    }
    data.claimants.push_back(std::move(cl));
  }
  return data;
}

ProblemData problem_from_string(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("schema/parse", "input is not valid JSON");
  return problem_from_json(j);
}

ojson problem_to_json(const ProblemData& data) {
  ojson j;
  j["issues"] = ojson::array();
  for (const Issue& is : data.issues)
    j["issues"].push_back({{"id", is.id}, {"amount", is.amount.str()}});
  j["claimants"] = ojson::array();
  for (const Claimant& cl : data.claimants)
    j["claimants"].push_back(
        {{"id", cl.id}, {"claim", cl.claim.str()}, {"issues", cl.issues}});
  return j;
}

ojson allocation_to_json(const Allocation& x) {
  ojson j;
  j["awards"] = ojson::array();
  for (int k = 0; k < x.size(); ++k)
    j["awards"].push_back({{"id", x.ids()[k]}, {"amount", x.amounts()[k].str()}});
  j["total"] = x.total().str();
  return j;
}

ojson report_to_json(const ValidationReport& rep) {
  auto entries = [](const std::vector<ValidationEntry>& es) {
    ojson arr = ojson::array();
    for (const ValidationEntry& e : es)
      arr.push_back({{"code", e.code}, {"message", e.message}});
    return arr;
  };
  ojson j;
  j["ok"] = rep.ok();
  j["errors"] = entries(rep.errors);
  j["warnings"] = entries(rep.warnings);
  return j;
}

ojson trace_to_json(const Trace& t) {
  ojson j;
  j["steps"] = ojson::array();
  for (const StepRecord& s : t.steps) {
    ojson step;
    step["s"] = s.index;
    step["lambda"] = s.factor.str();
    step["rho"] = s.rho_after.str();
    step["active_issues"] = ojson::array();
    for (int i : s.active_issues) step["active_issues"].push_back(t.issue_ids[i]);
    step["active_claimants"] = ojson::array();
    for (int c : s.active_claimants) step["active_claimants"].push_back(t.claimant_ids[c]);
    step["issue_factors"] = ojson::array();
    for (const auto& [i, f] : s.per_issue_factor)
      step["issue_factors"].push_back(
          {{"id", t.issue_ids[i]}, {"lambda", f ? ojson(f->str()) : ojson("unbounded")}});
    step["increments"] = ojson::array();
    for (int c : s.active_claimants)
      step["increments"].push_back(
          {{"id", t.claimant_ids[c]}, {"amount", s.increments[c].str()}});
    step["deactivated_issues"] = ojson::array();
    for (int i : s.deactivated_issues) step["deactivated_issues"].push_back(t.issue_ids[i]);
    step["deactivated_claimants"] = ojson::array();
    for (const auto& [c, cause] : s.deactivated_claimants)
      step["deactivated_claimants"].push_back(
          {{"id", t.claimant_ids[c]},
           {"cause", cause == DeactivationCause::kIssueExhausted ? "issue-exhausted"
                                                                 : "claim-exhausted"}});
    j["steps"].push_back(std::move(step));
  }

  j["allocation"] = allocation_to_json(t.final_allocation);
  j["leftover"] = ojson::array();
  for (std::size_t i = 0; i < t.leftover.size(); ++i)
    j["leftover"].push_back({{"id", t.issue_ids[i]}, {"amount", t.leftover[i].str()}});

  PrecedenceOrder po = precedence_order(t);
  auto order = [](const std::vector<std::string>& ids,
                  const std::vector<std::optional<int>>& steps) {
    ojson arr = ojson::array();
    for (std::size_t k = 0; k < ids.size(); ++k)
      arr.push_back({{"id", ids[k]}, {"step", steps[k] ? ojson(*steps[k]) : ojson("survived")}});
    return arr;
  };
  j["precedence"] = {{"issues", order(t.issue_ids, po.issue_step)},
                     {"claimants", order(t.claimant_ids, po.claimant_step)}};
  return j;
}

ojson witness_to_json(const Witness& w) {
  ojson j;
  j["rule"] = w.rule;
  if (w.priority_order) j["order"] = *w.priority_order;
  if (w.rule_reconstructed) j["reconstructed_rule"] = true;
  j["axiom"] = axiom_name(w.axiom);
  j["problem"] = problem_to_json(w.problem);

  if (const auto* s = std::get_if<SubsetSpec>(&w.transformation)) {
    j["transformation"] = {{"kind", "subset"}, {"keep", s->keep}};
  } else if (const auto* s = std::get_if<SplitSpec>(&w.transformation)) {
    ojson parts = ojson::array();
    for (const auto& [id, claim] : s->parts)
      parts.push_back({{"id", id}, {"claim", claim.str()}});
    j["transformation"] = {{"kind", "split"}, {"target", s->target}, {"parts", parts}};
  } else if (const auto* s = std::get_if<MergeSpec>(&w.transformation)) {
    j["transformation"] = {
        {"kind", "merge"}, {"sources", s->sources}, {"merged_id", s->merged_id}};
  } else {
    j["transformation"] = {{"kind", "none"}};
  }

  if (w.original) j["original_allocation"] = allocation_to_json(*w.original);
  if (w.transformed) j["transformed_allocation"] = allocation_to_json(*w.transformed);
  if (!w.violating_claimant.empty()) j["violating_claimant"] = w.violating_claimant;
  j["detail"] = w.detail;
  return j;
}

ojson verdict_to_json(const AxiomVerdict& v) {
  ojson j;
  j["axiom"] = axiom_name(v.axiom);
  switch (v.status) {
    case VerdictStatus::kHolds: j["status"] = "holds"; break;
    case VerdictStatus::kViolated: j["status"] = "violated"; break;
    case VerdictStatus::kRuleContract: j["status"] = "rule-contract-violation"; break;
  }
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

ReplayCase replay_from_json(const nlohmann::json& j) {
  ReplayCase rc;

  std::string rule = string_field(j, "rule");
  auto kind = rule_kind_from_name(rule);
  if (!kind) throw SchemaError("schema/unknown-rule", "unknown rule \"" + rule + "\"");
  if (*kind == RuleKind::kPriority && j.contains("order")) {
    std::vector<std::string> order;
    for (const nlohmann::json& id : array_field(j, "order")) {
      if (!id.is_string())
        throw SchemaError("schema/bad-type", "order entries must be strings");
      order.push_back(id.get<std::string>());
    }
    rc.rule = make_priority_rule(std::move(order));
  } else {
    rc.rule = make_rule(*kind);
  }

  std::string axiom = string_field(j, "axiom");
  auto a = axiom_from_name(axiom);
  if (!a) throw SchemaError("schema/unknown-axiom", "unknown axiom \"" + axiom + "\"");
  rc.axiom = *a;

  rc.problem = problem_from_json(field(j, "problem"));

  const nlohmann::json& tr = field(j, "transformation");
  std::string tkind = string_field(tr, "kind");
  if (tkind == "subset") {
    SubsetSpec s;
    for (const nlohmann::json& id : array_field(tr, "keep"))
      s.keep.push_back(id.get<std::string>());
    rc.transformation = std::move(s);
  } else if (tkind == "split") {
    SplitSpec s;
    s.target = string_field(tr, "target");
    for (const nlohmann::json& part : array_field(tr, "parts"))
      s.parts.emplace_back(string_field(part, "id"), rational_field(part, "claim"));
    rc.transformation = std::move(s);
  } else if (tkind == "merge") {
    MergeSpec s;
    for (const nlohmann::json& id : array_field(tr, "sources"))
      s.sources.push_back(id.get<std::string>());
    s.merged_id = string_field(tr, "merged_id");
    rc.transformation = std::move(s);
  } else if (tkind != "none") {
    throw SchemaError("schema/bad-transformation", "unknown transformation kind \"" + tkind + "\"");
  }
  return rc;
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xF];
  return out;
}

}  // namespace mac::io
