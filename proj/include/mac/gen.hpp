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
#include <random>
#include <vector>

#include "mac/problem.hpp"
#include "mac/transforms.hpp"

namespace mac {

struct IntRange {
  int lo = 1;
  int hi = 1;
};

/// Knobs for the seeded instance generator. Every generated problem passes
/// validation with no warnings: capacities are drawn as a random fraction in
/// (0,1) of the total claim on the issue, so every issue is strictly
/// over-claimed.
struct GenParams {
  IntRange claimants{2, 6};
  IntRange issues{1, 4};
  /// Chance that a claimant's set contains any given issue (at least one is
  /// always drawn).
  double density = 0.5;
  /// Chance that a claimant duplicates an earlier one (same claim set and
  /// claim). Keeps equal and homologous pairs frequent enough for the
  /// treatment-of-equals and merging axioms to have teeth on random data.
  double twin_prob = 0.25;
  Rational claim_lo{1};
  Rational claim_hi{20};
  /// Denominator bound for claims and capacity fractions; small bounds keep
  /// the exact arithmetic cheap at fuzzing scale.
  int den_bound = 8;
};

/// Deterministic uniform helpers over mt19937_64. The standard library
/// distributions are implementation-defined, so anything feeding golden
/// files or frozen seeds goes through these instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n) by rejection; n >= 1.
  std::uint64_t below(std::uint64_t n);

  /// Uniform in [lo, hi] inclusive.
  int range(int lo, int hi);

  bool chance(double p);

 private:
  std::mt19937_64 eng_;
};

/// Derives an independent stream seed for trial t of a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t t);

/// Throws std::invalid_argument when params are unsatisfiable.
void validate_params(const GenParams& params);

/// Deterministic in (params, seed). The result always validates cleanly.
Problem gen_problem(const GenParams& params, std::uint64_t seed);

/// Every subset of size n-1 first (in order of the dropped claimant), then
/// sampled smaller proper subsets up to `count`.
std::vector<SubsetSpec> gen_subset_specs(const Problem& p, int count, std::uint64_t seed);

/// Random splits of positive-claim claimants into 2..4 parts with exact
/// part sums; empty when no claimant can be split.
std::vector<SplitSpec> gen_split_specs(const Problem& p, int count, std::uint64_t seed);

/// Random merges of homologous groups; the earliest source keeps its id.
/// Returns fewer than `count` (possibly none) when no homologous pair exists.
std::vector<MergeSpec> gen_merge_specs(const Problem& p, int count, std::uint64_t seed);

}  // namespace mac
