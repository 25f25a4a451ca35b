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

#include <cstdint>
#include <optional>
#include <vector>

#include "mac/axioms.hpp"
#include "mac/gen.hpp"
#include "mac/rules.hpp"

namespace mac {

/// Execution policy for trial loops. Both policies return identical results:
/// trials are pure functions of their derived seed, and the parallel path
/// reports the hit with the smallest trial index. Serial is the reference
/// the parallel kernel is tested against.
enum class Exec { kSerial, kParallel };

/// How many transformation specs each trial samples for the axioms that
/// need them.
struct CheckOptions {
  int subset_extra = 2;  // beyond all subsets of size n-1
  int split_count = 3;
  int merge_count = 3;
};

/// Runs one axiom check with specs sampled deterministically from `seed`.
AxiomVerdict check_axiom(const Rule& rule, AxiomId axiom, const Problem& p,
                         const CheckOptions& opts, std::uint64_t seed);

struct FuzzParams {
  GenParams gen;
  CheckOptions check;
  int budget = 1000;
  std::uint64_t seed = 0;
};

struct FuzzHit {
  int trial = 0;
  std::uint64_t trial_seed = 0;
  AxiomVerdict verdict;
};

/// Draws seeded random problems and returns the first trial whose check
/// fails, re-verified through the checker before being returned; nullopt
/// when the budget is exhausted without a counterexample.
std::optional<FuzzHit> fuzz_axiom(const Rule& rule, AxiomId axiom,
                                  const FuzzParams& params, Exec exec);

/// Checks the axiom on every one of `params.budget` instances and returns
/// all failures in trial order. Used to scan axioms expected to hold.
std::vector<FuzzHit> sweep_axiom(const Rule& rule, AxiomId axiom,
                                 const FuzzParams& params, Exec exec);

}  // namespace mac
