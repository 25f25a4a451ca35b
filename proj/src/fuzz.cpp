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

#include "mac/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace mac {

AxiomVerdict check_axiom(const Rule& rule, AxiomId axiom, const Problem& p,
                         const CheckOptions& opts, std::uint64_t seed) {
  switch (axiom) {
    case AxiomId::kPeff:
      return check_peff(rule, p);
    case AxiomId::kEte:
      return check_ete(rule, p);
    case AxiomId::kGma:
      return check_gma(rule, p);
    case AxiomId::kCons: {
      auto specs = gen_subset_specs(
          p, p.claimant_count() + opts.subset_extra, derive_seed(seed, 11));
      return check_cons(rule, p, specs);
    }
    case AxiomId::kNms: {
      auto specs = gen_split_specs(p, opts.split_count, derive_seed(seed, 12));
      return check_nms(rule, p, specs);
    }
    case AxiomId::kNmrm: {
      auto specs = gen_merge_specs(p, opts.merge_count, derive_seed(seed, 13));
      return check_nmrm(rule, p, specs);
    }
  }
  throw std::logic_error("unknown axiom");
}

namespace {

AxiomVerdict run_trial(const Rule& rule, AxiomId axiom, const FuzzParams& params,
                       std::uint64_t trial_seed) {
  Problem p = gen_problem(params.gen, trial_seed);
  return check_axiom(rule, axiom, p, params.check, trial_seed);
}

}  // namespace

std::optional<FuzzHit> fuzz_axiom(const Rule& rule, AxiomId axiom,
                                  const FuzzParams& params, Exec exec) {
  std::optional<FuzzHit> hit;

  if (exec == Exec::kSerial) {
    for (int t = 0; t < params.budget; ++t) {
      std::uint64_t ts = derive_seed(params.seed, static_cast<std::uint64_t>(t));
      AxiomVerdict v = run_trial(rule, axiom, params, ts);
      if (!v.holds()) {
        hit = FuzzHit{t, ts, std::move(v)};
        break;
      }
    }
  } else {
    // Trials are independent; the kernel keeps only the smallest violating
    // trial index, so the outcome matches the serial loop for any thread
    // count. Later trials are skipped once a hit below them is known.
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::mutex mu;
#pragma omp parallel for schedule(dynamic, 4)
    for (int t = 0; t < params.budget; ++t) {
      if (t >= best.load(std::memory_order_relaxed)) continue;
      std::uint64_t ts = derive_seed(params.seed, static_cast<std::uint64_t>(t));
      AxiomVerdict v = run_trial(rule, axiom, params, ts);
      if (v.holds()) continue;
      std::lock_guard<std::mutex> lock(mu);
      if (t < best.load(std::memory_order_relaxed)) {
        best.store(t, std::memory_order_relaxed);
        hit = FuzzHit{t, ts, std::move(v)};
      }
    }
  }

  if (hit && hit->verdict.witness &&
      !reverify_witness(rule, *hit->verdict.witness))
    throw std::logic_error("fuzz: witness failed re-verification");
  return hit;
}

std::vector<FuzzHit> sweep_axiom(const Rule& rule, AxiomId axiom,
                                 const FuzzParams& params, Exec exec) {
  std::vector<FuzzHit> hits;

  if (exec == Exec::kSerial) {
    for (int t = 0; t < params.budget; ++t) {
      std::uint64_t ts = derive_seed(params.seed, static_cast<std::uint64_t>(t));
      AxiomVerdict v = run_trial(rule, axiom, params, ts);
      if (!v.holds()) hits.push_back(FuzzHit{t, ts, std::move(v)});
    }
  } else {
    std::mutex mu;
#pragma omp parallel for schedule(dynamic, 4)
    for (int t = 0; t < params.budget; ++t) {
      std::uint64_t ts = derive_seed(params.seed, static_cast<std::uint64_t>(t));
      AxiomVerdict v = run_trial(rule, axiom, params, ts);
      if (v.holds()) continue;
      std::lock_guard<std::mutex> lock(mu);
      hits.push_back(FuzzHit{t, ts, std::move(v)});
    }
    std::sort(hits.begin(), hits.end(),
              [](const FuzzHit& a, const FuzzHit& b) { return a.trial < b.trial; });
  }
  return hits;
}

}  // namespace mac
