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

#include "mac/gen.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace mac {

std::uint64_t Rng::below(std::uint64_t n) {
  assert(n >= 1);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = eng_();
  } while (r >= limit);
  return r % n;
}

int Rng::range(int lo, int hi) {
  assert(lo <= hi);
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return eng_() < static_cast<std::uint64_t>(p * 18446744073709551616.0);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t t) {
  // splitmix64 over the t-th point of the master stream.
  std::uint64_t z = master + (t + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

// floor/ceil of a rational as mpz, used to enumerate p/q in a closed range.
mpz_class rational_floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
  return q;
}

mpz_class rational_ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
  return q;
}

/// Uniform p/d with d in [1, den_bound] and p/d in [lo, hi].
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, int den_bound) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    long d = 1 + static_cast<long>(rng.below(den_bound));
    mpz_class num_lo = rational_ceil(lo * Rational(d));
    mpz_class num_hi = rational_floor(hi * Rational(d));
    if (num_hi < num_lo) continue;  // no multiple of 1/d in range; re-draw d
    mpz_class width = num_hi - num_lo + 1;
    // Claim magnitudes are small by construction; fits comfortably.
    unsigned long w = width.get_ui();
    mpz_class p = num_lo + static_cast<long>(rng.below(w));
    return Rational(mpq_class(p, mpz_class(d)));
  }
  throw std::invalid_argument("gen: no rational with bounded denominator in range");
}

}  // namespace

void validate_params(const GenParams& params) {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("gen: unsatisfiable params: " + what);
  };
  if (params.claimants.lo < 1 || params.claimants.lo > params.claimants.hi)
    bad("claimant range");
  if (params.issues.lo < 1 || params.issues.lo > params.issues.hi) bad("issue range");
  if (!(params.density > 0.0) || params.density > 1.0) bad("density not in (0,1]");
  if (params.twin_prob < 0.0 || params.twin_prob > 1.0) bad("twin probability");
  if (!params.claim_lo.is_positive()) bad("claims must be positive");
  if (params.claim_hi < params.claim_lo) bad("claim range");
  if (params.den_bound < 1) bad("denominator bound");
}

Problem gen_problem(const GenParams& params, std::uint64_t seed) {
  validate_params(params);
  Rng rng(seed);

  const int m = rng.range(params.issues.lo, params.issues.hi);
  const int n = rng.range(params.claimants.lo, params.claimants.hi);

  std::vector<std::vector<int>> sets(n);
  std::vector<Rational> claims(n);
  for (int j = 0; j < n; ++j) {
    if (j > 0 && rng.chance(params.twin_prob)) {
      int t = static_cast<int>(rng.below(j));
      sets[j] = sets[t];
      claims[j] = claims[t];
      continue;
    }
    for (int i = 0; i < m; ++i)
      if (rng.chance(params.density)) sets[j].push_back(i);
    if (sets[j].empty()) sets[j].push_back(static_cast<int>(rng.below(m)));
    claims[j] = random_rational(rng, params.claim_lo, params.claim_hi, params.den_bound);
  }

  // Orphan issues would be impossible to over-claim; hand each to a random
  // claimant.
  std::vector<bool> claimed(m, false);
  for (int j = 0; j < n; ++j)
    for (int i : sets[j]) claimed[i] = true;
  for (int i = 0; i < m; ++i) {
    if (claimed[i]) continue;
    int j = static_cast<int>(rng.below(n));
    sets[j].push_back(i);
    std::sort(sets[j].begin(), sets[j].end());
  }

  std::vector<Rational> totals(m);
  for (int j = 0; j < n; ++j)
    for (int i : sets[j]) totals[i] += claims[j];

  ProblemData data;
  for (int i = 0; i < m; ++i) {
    // amount = fraction in (0,1) of the total claim; always strictly binding.
    long b = 2 + static_cast<long>(rng.below(std::max(1, params.den_bound - 1)));
    long a = 1 + static_cast<long>(rng.below(b - 1));
    data.issues.push_back({"E" + std::to_string(i + 1), Rational(a, b) * totals[i]});
  }
  for (int j = 0; j < n; ++j) {
    Claimant cl;
    cl.id = "C" + std::to_string(j + 1);
    cl.claim = claims[j];
    for (int i : sets[j]) cl.issues.push_back(data.issues[i].id);
    data.claimants.push_back(std::move(cl));
  }
  return Problem::validated(std::move(data));
}

std::vector<SubsetSpec> gen_subset_specs(const Problem& p, int count, std::uint64_t seed) {
  const int n = p.claimant_count();
  std::vector<SubsetSpec> specs;
  if (n < 2) return specs;

  for (int drop = 0; drop < n && static_cast<int>(specs.size()) < count; ++drop) {
    SubsetSpec s;
    for (int j = 0; j < n; ++j)
      if (j != drop) s.keep.push_back(p.claimant(j).id);
    specs.push_back(std::move(s));
  }

  Rng rng(seed);
  std::set<std::vector<int>> seen;
  int attempts = 0;
  while (static_cast<int>(specs.size()) < count && n > 2 && attempts++ < 16 * count) {
    int size = rng.range(1, n - 2);
    std::vector<int> pick(n);
    for (int j = 0; j < n; ++j) pick[j] = j;
    for (int j = 0; j < size; ++j)
      std::swap(pick[j], pick[j + static_cast<int>(rng.below(n - j))]);
    pick.resize(size);
    std::sort(pick.begin(), pick.end());
    if (!seen.insert(pick).second) continue;
    SubsetSpec s;
    for (int j : pick) s.keep.push_back(p.claimant(j).id);
    specs.push_back(std::move(s));
  }
  return specs;
}

std::vector<SplitSpec> gen_split_specs(const Problem& p, int count, std::uint64_t seed) {
  std::vector<int> candidates;
  for (int j = 0; j < p.claimant_count(); ++j)
    if (p.claimant(j).claim.is_positive()) candidates.push_back(j);

  std::vector<SplitSpec> specs;
  if (candidates.empty()) return specs;

  std::set<std::string> ids;
  for (const Claimant& cl : p.claimants()) ids.insert(cl.id);

  Rng rng(seed);
  for (int s = 0; s < count; ++s) {
    int j = candidates[rng.below(candidates.size())];
    const Claimant& target = p.claimant(j);
    int k = rng.range(2, 4);
    std::vector<long> weights(k);
    long total = 0;
    for (long& w : weights) {
      w = 1 + static_cast<long>(rng.below(8));
      total += w;
    }
    SplitSpec spec;
    spec.target = target.id;
    for (int i = 0; i < k; ++i) {
      std::string id = target.id + "_s" + std::to_string(i + 1);
      while (ids.contains(id)) id += "x";
      spec.parts.emplace_back(id, target.claim * Rational(weights[i], total));
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::vector<MergeSpec> gen_merge_specs(const Problem& p, int count, std::uint64_t seed) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int j = 0; j < p.claimant_count(); ++j) groups[p.issue_set(j)].push_back(j);

  std::vector<std::vector<int>> eligible;
  for (auto& [set, members] : groups)
    if (members.size() >= 2) eligible.push_back(members);

  std::vector<MergeSpec> specs;
  if (eligible.empty()) return specs;

  Rng rng(seed);
  std::set<std::vector<int>> seen;
  int attempts = 0;
  while (static_cast<int>(specs.size()) < count && attempts++ < 16 * count) {
    std::vector<int> group = eligible[rng.below(eligible.size())];
    int k = rng.range(2, static_cast<int>(group.size()));
    for (int i = 0; i < k; ++i)
      std::swap(group[i], group[i + static_cast<int>(rng.below(group.size() - i))]);
    group.resize(k);
    std::sort(group.begin(), group.end());
    if (!seen.insert(group).second) continue;
    MergeSpec spec;
    for (int j : group) spec.sources.push_back(p.claimant(j).id);
    spec.merged_id = p.claimant(group.front()).id;
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace mac
