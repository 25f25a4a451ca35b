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

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mac/axioms.hpp"
#include "mac/cpa.hpp"
#include "mac/problem.hpp"
#include "mac/rules.hpp"

namespace mac::io {

/// Serialized documents use ordered_json so field order (and therefore the
/// emitted bytes) is a pure function of the content.
using ojson = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "macrules";
inline constexpr std::string_view kToolVersion = "0.1.0";

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Parses the problem document format; throws SchemaError with a
/// machine-readable code on any violation. Unknown keys are ignored.
ProblemData problem_from_json(const nlohmann::json& j);
ProblemData problem_from_string(std::string_view text);

ojson problem_to_json(const ProblemData& data);
inline ojson problem_to_json(const Problem& p) { return problem_to_json(p.data()); }

ojson allocation_to_json(const Allocation& x);
ojson report_to_json(const ValidationReport& rep);

/// Step-by-step trace document: factors and cumulative fractions as exact
/// rational strings, issues with no active demand marked "unbounded",
/// deactivation causes, leftovers, and the induced precedence order
/// ("survived" for entities active at termination).
ojson trace_to_json(const Trace& t);

ojson witness_to_json(const Witness& w);
ojson verdict_to_json(const AxiomVerdict& v);

/// A witness document read back for replay: the rule, the axiom, the
/// instance, and the recorded transformation.
struct ReplayCase {
  RulePtr rule;
  AxiomId axiom = AxiomId::kPeff;
  ProblemData problem;
  std::variant<std::monostate, SubsetSpec, SplitSpec, MergeSpec> transformation;
};

ReplayCase replay_from_json(const nlohmann::json& j);

/// FNV-1a 64-bit digest, hex-encoded; stamps output documents with the
/// identity of the input they were computed from.
std::string digest_hex(std::string_view bytes);

}  // namespace mac::io
