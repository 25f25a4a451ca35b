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
#include "mac/cpa.hpp"
#include "mac/gen.hpp"
#include "mac/rules.hpp"

using namespace mac;
using test::rat;

TEST_CASE("straddle fixture: full trace") {
  Problem pb = test::fixture_pb();
  Trace t = solve_cpa(pb);

  CHECK(t.final_allocation.amounts() == std::vector<Rational>{rat("6"), rat("4")});
  REQUIRE(t.steps.size() == 2);

  const StepRecord& s1 = t.steps[0];
  CHECK(s1.factor == rat("2/3"));
  CHECK(s1.rho_after == rat("2/3"));
  CHECK(s1.active_issues == std::vector<int>{0, 1});
  CHECK(s1.active_claimants == std::vector<int>{0, 1});
  CHECK(s1.increments == std::vector<Rational>{rat("16/3"), rat("4")});
  REQUIRE(s1.per_issue_factor.size() == 2);
  CHECK(*s1.per_issue_factor[0].second == rat("5/7"));
  CHECK(*s1.per_issue_factor[1].second == rat("2/3"));
  CHECK(s1.deactivated_issues == std::vector<int>{1});
  REQUIRE(s1.deactivated_claimants.size() == 1);
  CHECK(s1.deactivated_claimants[0].first == 1);
  CHECK(s1.deactivated_claimants[0].second == DeactivationCause::kIssueExhausted);

  const StepRecord& s2 = t.steps[1];
  CHECK(s2.factor == rat("1/4"));
  CHECK(s2.rho_after == rat("3/4"));
  CHECK(s2.active_claimants == std::vector<int>{0});
  CHECK(s2.increments[0] == rat("2/3"));
  CHECK(s2.deactivated_issues == std::vector<int>{0});

  for (const Rational& l : t.leftover) CHECK(l == rat("0"));
  CHECK(is_pareto_efficient(pb, t.final_allocation));

  PrecedenceOrder po = precedence_order(t);
  CHECK(po.issue_step[1] == 1);  // E2 before E1
  CHECK(po.issue_step[0] == 2);
  CHECK(rho_sequence(t) == std::vector<Rational>{rat("2/3"), rat("3/4")});
  // Awards equal the cumulative fraction at exit times the claim.
  CHECK(t.final_allocation[1] == rat("2/3") * rat("6"));
  CHECK(t.final_allocation[0] == rat("3/4") * rat("8"));
}

TEST_CASE("chain fixture: leftover stays on the surviving issue") {
  Problem pa = test::fixture_pa();
  Trace t = solve_cpa(pa);

  CHECK(t.final_allocation.amounts() == std::vector<Rational>{rat("3"), rat("4")});
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[0].factor == rat("3/5"));
  CHECK(t.steps[1].factor == rat("1/6"));
  CHECK(rho_sequence(t) == std::vector<Rational>{rat("3/5"), rat("2/3")});

  CHECK(t.leftover[0] == rat("0"));
  CHECK(t.leftover[1] == rat("3"));
  CHECK(t.leftover[2] == rat("0"));
  CHECK(is_pareto_efficient(pa, t.final_allocation));

  PrecedenceOrder po = precedence_order(t);
  CHECK(po.issue_step[0] == 1);             // E1 first
  CHECK(po.issue_step[2] == 2);             // then E3
  CHECK_FALSE(po.issue_step[1].has_value());  // E2 survived
}

TEST_CASE("single issue reduces to the proportional formula") {
  ProblemData d;
  d.issues = {{"E", rat("10")}};
  d.claimants = {{"A", rat("8"), {"E"}}, {"B", rat("6"), {"E"}}};
  Problem p = Problem::validated(d);
  Trace t = solve_cpa(p);
  CHECK(t.final_allocation.amounts() ==
        std::vector<Rational>{rat("40/7"), rat("30/7")});
  CHECK(t.final_allocation == solve_prop_single(p));

  SUBCASE("equal claimants halve the estate") {
    ProblemData e;
    e.issues = {{"E", rat("10")}};
    e.claimants = {{"A", rat("7"), {"E"}}, {"B", rat("7"), {"E"}}};
    Problem q = Problem::validated(e);
    CHECK(solve_cpa(q).final_allocation.amounts() ==
          std::vector<Rational>{rat("5"), rat("5")});
  }
}

TEST_CASE("full-reimbursement round terminates the procedure") {
  ProblemData d;
  d.issues = {{"E1", rat("10")}, {"E2", rat("8")}};
  d.claimants = {{"A", rat("3"), {"E1"}}, {"B", rat("2"), {"E1", "E2"}}};
  // Not binding anywhere; the procedure must settle everyone in one round.
  Problem p = Problem::validated(d);
  Trace t = solve_cpa(p);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].factor == rat("1"));
  CHECK(t.steps[0].rho_after == rat("1"));
  CHECK(t.final_allocation.amounts() == std::vector<Rational>{rat("3"), rat("2")});
  CHECK(t.steps[0].deactivated_claimants.size() == 2);
  CHECK(t.steps[0].deactivated_claimants[0].second ==
        DeactivationCause::kClaimExhausted);
  PrecedenceOrder po = precedence_order(t);
  CHECK_FALSE(po.issue_step[0].has_value());
  CHECK_FALSE(po.issue_step[1].has_value());
}

TEST_CASE("zero capacities block their claimants from the start") {
  ProblemData d;
  d.issues = {{"E1", rat("0")}, {"E2", rat("5")}};
  d.claimants = {{"A", rat("4"), {"E1", "E2"}}, {"B", rat("6"), {"E2"}}};
  Problem p = Problem::validated(d);
  Trace t = solve_cpa(p);
  CHECK(t.final_allocation[0] == rat("0"));
  CHECK(t.final_allocation[1] == rat("5"));
  PrecedenceOrder po = precedence_order(t);
  CHECK(po.issue_step[0] == 0);     // never active
  CHECK(po.claimant_step[0] == 0);  // blocked before round 1
}

TEST_CASE("zero claims never participate") {
  ProblemData d;
  d.issues = {{"E1", rat("3")}};
  d.claimants = {{"A", rat("0"), {"E1"}}, {"B", rat("5"), {"E1"}}};
  Problem p = Problem::validated(d);
  Trace t = solve_cpa(p);
  CHECK(t.final_allocation[0] == rat("0"));
  CHECK(t.final_allocation[1] == rat("3"));
}

TEST_CASE("decompose splits the claimant-issue graph into components") {
  ProblemData d;
  d.issues = {{"E1", rat("10")}, {"F1", rat("3")}, {"E2", rat("4")},
              {"F2", rat("10")}, {"F3", rat("4")}};
  d.claimants = {{"C1", rat("8"), {"E1"}},
                 {"D1", rat("5"), {"F1", "F2"}},
                 {"C2", rat("6"), {"E1", "E2"}},
                 {"D2", rat("6"), {"F2", "F3"}}};
  Problem p = Problem::validated(d);

  std::vector<Problem> parts = decompose(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].issue_count() == 2);
  CHECK(parts[1].issue_count() == 3);

  // Concatenating the component solutions is the whole-problem solution.
  Allocation whole = solve_cpa(p).final_allocation;
  for (const Problem& part : parts) {
    Allocation sub = solve_cpa(part).final_allocation;
    for (int j = 0; j < sub.size(); ++j)
      CHECK(*whole.find(sub.ids()[j]) == sub[j]);
  }

  SUBCASE("a connected problem is one component") {
    CHECK(decompose(test::fixture_pb()).size() == 1);
  }

  SUBCASE("isolated pairs solve to min(claim, capacity)") {
    ProblemData iso;
    for (int k = 0; k < 4; ++k) {
      std::string e = "E" + std::to_string(k);
      iso.issues.push_back({e, Rational(k + 1)});
      iso.claimants.push_back({"C" + std::to_string(k), Rational(2 * k + 3), {e}});
    }
    Problem q = Problem::validated(iso);
    CHECK(decompose(q).size() == 4);
    Allocation x = solve_cpa(q).final_allocation;
    for (int k = 0; k < 4; ++k)
      CHECK(x[k] == mac::min(Rational(k + 1), Rational(2 * k + 3)));
  }
}

TEST_CASE("procedure invariants on random instances") {
  GenParams params;
  params.claimants = {1, 10};
  params.issues = {1, 6};
  params.twin_prob = 0.3;

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Problem p = gen_problem(params, derive_seed(5150, seed));
    Trace t = solve_cpa(p);

    // Feasible and efficient, always.
    CHECK(is_feasible(p, t.final_allocation));
    CHECK(is_pareto_efficient(p, t.final_allocation));

    // Bounded length; factor-1 rounds are final; any shorter round kills an
    // issue; the cumulative fractions climb strictly.
    CHECK(static_cast<int>(t.steps.size()) <= p.issue_count());
    Rational prev(0);
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
      const StepRecord& rec = t.steps[s];
      CHECK(rec.factor.is_positive());
      CHECK(rec.factor <= rat("1"));
      if (rec.factor == rat("1")) CHECK(s + 1 == t.steps.size());
      if (rec.factor < rat("1")) CHECK(!rec.deactivated_issues.empty());
      CHECK(rec.rho_after > prev);
      prev = rec.rho_after;
    }
    CHECK(prev <= rat("1"));

    // Claimants exiting at step s hold exactly rho_s of their claim.
    PrecedenceOrder po = precedence_order(t);
    for (int j = 0; j < p.claimant_count(); ++j) {
      if (!po.claimant_step[j] || *po.claimant_step[j] == 0) continue;
      const Rational& rho = t.steps[*po.claimant_step[j] - 1].rho_after;
      CHECK(t.final_allocation[j] == rho * p.claimant(j).claim);
    }
  }
}

TEST_CASE("scaling the data scales the awards") {
  GenParams params;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Problem p = gen_problem(params, derive_seed(77, seed));
    Rational k(3, 7);
    ProblemData scaled = p.data();
    for (Issue& is : scaled.issues) is.amount *= k;
    for (Claimant& cl : scaled.claimants) cl.claim *= k;
    Allocation x = solve_cpa(p).final_allocation;
    Allocation y = solve_cpa(Problem::validated(scaled)).final_allocation;
    for (int j = 0; j < x.size(); ++j) CHECK(y[j] == k * x[j]);
  }
}

TEST_CASE("random disjoint unions decompose exactly") {
  GenParams params;
  params.claimants = {1, 5};
  params.issues = {1, 4};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Problem a = gen_problem(params, derive_seed(2024, 2 * seed));
    Problem b = gen_problem(params, derive_seed(2024, 2 * seed + 1));

    ProblemData u = a.data();
    for (Issue is : b.data().issues) {
      is.id = "b_" + is.id;
      u.issues.push_back(std::move(is));
    }
    for (Claimant cl : b.data().claimants) {
      cl.id = "b_" + cl.id;
      for (std::string& iid : cl.issues) iid = "b_" + iid;
      u.claimants.push_back(std::move(cl));
    }
    Problem whole = Problem::validated(std::move(u));
    Allocation x = solve_cpa(whole).final_allocation;

    Allocation xa = solve_cpa(a).final_allocation;
    for (int j = 0; j < xa.size(); ++j) CHECK(*x.find(xa.ids()[j]) == xa[j]);
    Allocation xb = solve_cpa(b).final_allocation;
    for (int j = 0; j < xb.size(); ++j) CHECK(*x.find("b_" + xb.ids()[j]) == xb[j]);
  }
}
