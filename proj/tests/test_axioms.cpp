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

#include <doctest.h>

#include "fixtures.hpp"
#include "mac/axioms.hpp"
#include "mac/cpa.hpp"
#include "mac/fuzz.hpp"
#include "mac/gen.hpp"
#include "mac/rules.hpp"

using namespace mac;
using test::rat;

namespace {

Problem equal_pair_problem() {
  ProblemData d;
  d.issues = {{"E", rat("10")}};
  d.claimants = {{"C1", rat("7"), {"E"}}, {"C2", rat("7"), {"E"}}};
  return Problem::validated(std::move(d));
}

}  // namespace

TEST_CASE("pareto efficiency checker") {
  Problem pb = test::fixture_pb();
  CHECK(check_peff(*make_rule(RuleKind::kCpa), pb).holds());
  CHECK(check_peff(*make_priority_rule({"C1", "C2"}), pb).holds());
  CHECK(check_peff(*make_priority_rule({"C2", "C1"}), pb).holds());

  AxiomVerdict v = check_peff(*make_rule(RuleKind::kNull), pb);
  CHECK(v.status == VerdictStatus::kViolated);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->violating_claimant == "C1");
  CHECK(reverify_witness(*make_rule(RuleKind::kNull), *v.witness));
}

TEST_CASE("equal treatment checker") {
  Problem eq = equal_pair_problem();
  CHECK(check_ete(*make_rule(RuleKind::kCpa), eq).holds());

  AxiomVerdict v = check_ete(*make_priority_rule({"C1", "C2"}), eq);
  CHECK(v.status == VerdictStatus::kViolated);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness->original->find("C1") == rat("7"));
  CHECK(*v.witness->original->find("C2") == rat("3"));
  CHECK(reverify_witness(*make_priority_rule({"C1", "C2"}), *v.witness));

  // No equal pair: the check holds for any rule, vacuously.
  CHECK(check_ete(*make_priority_rule({"C1", "C2"}), test::fixture_pb()).holds());
}

TEST_CASE("guaranteed minimum checker") {
  Problem pb = test::fixture_pb();
  CHECK(check_gma(*make_rule(RuleKind::kCpa), pb).holds());

  // The two-phase rule hands E1 to its exclusive claimant; C2 ends at 2,
  // below its worst-case share min((6/14)*10, 4) = 4.
  AxiomVerdict v = check_gma(*make_rule(RuleKind::kTwoPhase), pb);
  CHECK(v.status == VerdictStatus::kViolated);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->violating_claimant == "C2");
  CHECK(reverify_witness(*make_rule(RuleKind::kTwoPhase), *v.witness));

  // Single issue: the floor is the rule's own award; equality, so it holds.
  ProblemData d;
  d.issues = {{"E", rat("10")}};
  d.claimants = {{"A", rat("8"), {"E"}}, {"B", rat("6"), {"E"}}};
  CHECK(check_gma(*make_rule(RuleKind::kCpa), Problem::validated(d)).holds());
}

TEST_CASE("consistency checker") {
  RulePtr cpa = make_rule(RuleKind::kCpa);
  Problem pb = test::fixture_pb();
  std::vector<SubsetSpec> keep_each = {{{"C1"}}, {{"C2"}}};
  CHECK(check_cons(*cpa, pb, keep_each).holds());

  Problem pa = test::fixture_pa();
  AxiomVerdict pa_verdict = check_cons(*cpa, pa, keep_each);
  CHECK(pa_verdict.holds());
  // Dropping the right claimant leaves the middle issue slack in the
  // reduced problem; the checker evaluates it anyway and says so.
  CHECK(!pa_verdict.notes.empty());

  // Hand-built counterexample for the two-step rule: dropping the two right
  // claimants with their awards leaves a reduced problem where the rule
  // switches from (18/7, 24/7) to (3, 3).
  Problem chain = test::fixture_chain4();
  std::vector<SubsetSpec> keep_xy = {{{"X", "Y"}}};
  AxiomVerdict v = check_cons(*make_rule(RuleKind::kTwoStep), chain, keep_xy);
  CHECK(v.status == VerdictStatus::kViolated);
  REQUIRE(v.witness.has_value());
  CHECK(reverify_witness(*make_rule(RuleKind::kTwoStep), *v.witness));
  // CPA itself is consistent on the same instance and subset.
  CHECK(check_cons(*cpa, chain, keep_xy).holds());
}

TEST_CASE("no-splitting checker") {
  RulePtr cpa = make_rule(RuleKind::kCpa);
  Problem pb = test::fixture_pb();
  std::vector<SplitSpec> split_c1 = {{"C1", {{"C1a", rat("5")}, {"C1b", rat("3")}}}};
  CHECK(check_nms(*cpa, pb, split_c1).holds());

  // Splitting under the egalitarian rule pays the family twice: one issue,
  // claims (8, 6), the 8 split into (4, 4) moves the family from 5 to 20/3.
  ProblemData d;
  d.issues = {{"E", rat("10")}};
  d.claimants = {{"C1", rat("8"), {"E"}}, {"C2", rat("6"), {"E"}}};
  Problem single = Problem::validated(d);
  std::vector<SplitSpec> split44 = {{"C1", {{"C1a", rat("4")}, {"C1b", rat("4")}}}};
  AxiomVerdict v = check_nms(*make_rule(RuleKind::kCeaMac), single, split44);
  CHECK(v.status == VerdictStatus::kViolated);
  REQUIRE(v.witness.has_value());
  Rational family = *v.witness->transformed->find("C1a") +
                    *v.witness->transformed->find("C1b");
  CHECK(family == rat("20/3"));
  CHECK(*v.witness->original->find("C1") == rat("5"));
  CHECK(reverify_witness(*make_rule(RuleKind::kCeaMac), *v.witness));

  // One-part splits change nothing for any rule.
  std::vector<SplitSpec> rename = {{"C1", {{"C1x", rat("8")}}}};
  CHECK(check_nms(*make_rule(RuleKind::kCeaMac), single, rename).holds());
}

TEST_CASE("no-merging checker") {
  RulePtr cpa = make_rule(RuleKind::kCpa);
  ProblemData d;
  d.issues = {{"E1", rat("10")}, {"E2", rat("4")}};
  d.claimants = {{"C1", rat("8"), {"E1"}},
                 {"C2a", rat("4"), {"E1", "E2"}},
                 {"C2b", rat("2"), {"E1", "E2"}}};
  Problem p = Problem::validated(d);
  std::vector<MergeSpec> merge = {{{"C2a", "C2b"}, "C2a"}};
  CHECK(check_nmrm(*cpa, p, merge).holds());

  // Merging every claimant of one estate: the merged claimant takes the
  // whole estate, exactly the proportional total.
  ProblemData s;
  s.issues = {{"E", rat("10")}};
  s.claimants = {{"A", rat("8"), {"E"}}, {"B", rat("6"), {"E"}}};
  std::vector<MergeSpec> all = {{{"A", "B"}, "A"}};
  CHECK(check_nmrm(*cpa, Problem::validated(s), all).holds());
}

TEST_CASE("explicit priority orders follow their claimants through transformations") {
  Problem pb = test::fixture_pb();
  RulePtr last_c1 = make_priority_rule({"C2", "C1"});

  // Splits keep the family where the parent stood, so the family total is
  // what the parent would have taken.
  std::vector<SplitSpec> splits = {{"C1", {{"C1b", rat("3")}, {"C1a", rat("5")}}},
                                   {"C2", {{"C2a", rat("1")}, {"C2b", rat("5")}}}};
  CHECK(check_nms(*last_c1, pb, splits).holds());
  CHECK(check_nms(*make_priority_rule({"C1", "C2"}), pb, splits).holds());

  // Departures drop out of the order.
  std::vector<SubsetSpec> keep_each = {{{"C1"}}, {{"C2"}}};
  CHECK(check_cons(*last_c1, pb, keep_each).holds());
  CHECK(check_gma(*last_c1, pb).holds());
  CHECK(check_peff(*last_c1, pb).holds());

  // The merge adapter yields a valid order (merged claimant at the target's
  // slot); the merged problem must solve without complaints.
  ProblemData d;
  d.issues = {{"E1", rat("10")}, {"E2", rat("4")}};
  d.claimants = {{"C2a", rat("4"), {"E1", "E2"}},
                 {"C1", rat("8"), {"E1"}},
                 {"C2b", rat("2"), {"E1", "E2"}}};
  Problem p3 = Problem::validated(d);
  MergeSpec spec{{"C2a", "C2b"}, "C2a"};
  RulePtr adapted =
      make_priority_rule({"C2b", "C1", "C2a"})->after_merge(p3, spec);
  Problem merged = merge_problem(p3, spec);
  CHECK(is_feasible(merged, adapted->allocate(merged)));
  // C2a keeps its slot at the back of the order; C2b disappears into it.
  CHECK(adapted->priority_order() == std::vector<std::string>{"C1", "C2a"});
}

TEST_CASE("a rule breaking feasibility is a contract failure, not an axiom one") {
  struct Overpay final : Rule {
    RuleKind kind() const override { return RuleKind::kNull; }
    std::string name() const override { return "overpay"; }
    Allocation allocate(const Problem& p) const override {
      std::vector<Rational> x;
      for (const Claimant& cl : p.claimants()) x.push_back(cl.claim);
      return Allocation(p, std::move(x));  // full claims: infeasible when binding
    }
  };
  auto rule = std::make_shared<Overpay>();
  AxiomVerdict v = check_peff(*rule, test::fixture_pb());
  CHECK(v.status == VerdictStatus::kRuleContract);
  REQUIRE(v.witness.has_value());
  CHECK(reverify_witness(*rule, *v.witness));
}

TEST_CASE("fuzzer finds seeded counterexamples and reports the trial") {
  FuzzParams params;
  params.budget = 200;
  params.seed = 424242;

  SUBCASE("null rule fails efficiency on the first draw") {
    auto hit = fuzz_axiom(*make_rule(RuleKind::kNull), AxiomId::kPeff, params,
                          Exec::kSerial);
    REQUIRE(hit.has_value());
    CHECK(hit->trial == 0);
    CHECK(hit->verdict.status == VerdictStatus::kViolated);
  }

  SUBCASE("declaration-order priority fails equal treatment") {
    auto hit = fuzz_axiom(*make_rule(RuleKind::kPriority), AxiomId::kEte, params,
                          Exec::kSerial);
    REQUIRE(hit.has_value());
    CHECK(hit->verdict.witness.has_value());
  }

  SUBCASE("the proportional procedure survives every axiom at this budget") {
    FuzzParams small = params;
    small.budget = 60;
    RulePtr cpa = make_rule(RuleKind::kCpa);
    for (AxiomId a : {AxiomId::kPeff, AxiomId::kEte, AxiomId::kGma, AxiomId::kCons,
                      AxiomId::kNms, AxiomId::kNmrm})
      CHECK_FALSE(fuzz_axiom(*cpa, a, small, Exec::kSerial).has_value());
  }
}
