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

#include <string>
#include <vector>

#include "mac/problem.hpp"

namespace mac::test {

inline Rational rat(const std::string& s) { return *Rational::parse(s); }

/// Two issues, one claimant exclusive to the big issue, one straddling both.
/// Hand-traced: the common factor is 2/3 then 1/4, awards (6, 4), the small
/// issue empties first.
inline Problem fixture_pb() {
  ProblemData d;
  d.issues = {{"E1", rat("10")}, {"E2", rat("4")}};
  d.claimants = {{"C1", rat("8"), {"E1"}}, {"C2", rat("6"), {"E1", "E2"}}};
  return Problem::validated(std::move(d));
}

/// Three issues in a chain. Hand-traced: factors 3/5 then 1/6, awards
/// (3, 4), issue E2 keeps a leftover of 3.
inline Problem fixture_pa() {
  ProblemData d;
  d.issues = {{"E1", rat("3")}, {"E2", rat("10")}, {"E3", rat("4")}};
  d.claimants = {{"C1", rat("5"), {"E1", "E2"}}, {"C2", rat("6"), {"E2", "E3"}}};
  return Problem::validated(std::move(d));
}

/// Four claimants on a three-issue chain where the guaranteed-minimum
/// pre-payment of the two-step rule shifts the final split away from the
/// proportional procedure: two-step gives (18/7, 24/7, 1, 1), the
/// proportional procedure gives (3, 3, 1, 1). Hand-traced both ways; the
/// divergence makes it a consistency counterexample for two-step.
inline Problem fixture_chain4() {
  ProblemData d;
  d.issues = {{"E1", rat("6")}, {"E2", rat("4")}, {"E3", rat("2")}};
  d.claimants = {{"X", rat("6"), {"E1", "E2"}},
                 {"Y", rat("6"), {"E1"}},
                 {"W", rat("6"), {"E2", "E3"}},
                 {"V", rat("6"), {"E3"}}};
  return Problem::validated(std::move(d));
}

inline Allocation alloc(const Problem& p, const std::vector<std::string>& amounts) {
  std::vector<Rational> xs;
  for (const std::string& a : amounts) xs.push_back(rat(a));
  return Allocation(p, std::move(xs));
}

}  // namespace mac::test
