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
//
// Compares the serial reference sweep against the OpenMP kernel on the same
// deterministic workloads, and times single solves at CLI scale.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mac/cpa.hpp"
#include "mac/fuzz.hpp"
#include "mac/gen.hpp"
#include "mac/rules.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double time_sweep(const mac::Rule& rule, mac::AxiomId axiom,
                  const mac::FuzzParams& params, mac::Exec exec, std::size_t* hits) {
  Clock::time_point t0 = Clock::now();
  auto found = mac::sweep_axiom(rule, axiom, params, exec);
  double dt = seconds_since(t0);
  *hits = found.size();
  return dt;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  mac::FuzzParams params;
  params.gen.claimants = {2, 8};
  params.gen.issues = {1, 5};
  params.budget = 1500;
  params.seed = 20260809;

  struct Workload {
    const char* label;
    mac::RuleKind rule;
    mac::AxiomId axiom;
  };
  const Workload workloads[] = {
      {"cpa/cons  (full scan, no hits)", mac::RuleKind::kCpa, mac::AxiomId::kCons},
      {"cpa/nms   (full scan, no hits)", mac::RuleKind::kCpa, mac::AxiomId::kNms},
      {"two-phase/gma (hit collection)", mac::RuleKind::kTwoPhase, mac::AxiomId::kGma},
  };

  std::printf("%-32s %10s %10s %8s %6s\n", "workload", "serial[s]", "openmp[s]",
              "speedup", "hits");
  for (const Workload& w : workloads) {
    mac::RulePtr rule = mac::make_rule(w.rule);
    std::size_t hits_serial = 0, hits_parallel = 0;
    double ts = time_sweep(*rule, w.axiom, params, mac::Exec::kSerial, &hits_serial);
    double tp = time_sweep(*rule, w.axiom, params, mac::Exec::kParallel, &hits_parallel);
    if (hits_serial != hits_parallel) {
      std::printf("MISMATCH on %s: %zu vs %zu hits\n", w.label, hits_serial, hits_parallel);
      return 1;
    }
    std::printf("%-32s %10.3f %10.3f %7.2fx %6zu\n", w.label, ts, tp,
                ts / (tp > 0 ? tp : 1e-9), hits_serial);
  }

  // Single-solve latency at the scale the CLI quotes.
  mac::GenParams big;
  big.claimants = {50, 50};
  big.issues = {20, 20};
  mac::Problem p = mac::gen_problem(big, 99);
  Clock::time_point t0 = Clock::now();
  mac::Trace t = mac::solve_cpa(p);
  double dt = seconds_since(t0);
  std::printf("solve cpa 50x20: %.4fs (%zu steps)\n", dt, t.steps.size());
  return 0;
}
