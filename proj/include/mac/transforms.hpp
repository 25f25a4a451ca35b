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
#include <utility>
#include <vector>

#include "mac/problem.hpp"

namespace mac {

/// Claimants that stay behind in a reduced problem. Must be a non-empty
/// proper subset of the claimant set.
struct SubsetSpec {
  std::vector<std::string> keep;
};

/// Replaces `target` by `parts`; part claims are positive and sum exactly to
/// the target's claim, and every part inherits the target's claim set.
struct SplitSpec {
  std::string target;
  std::vector<std::pair<std::string, Rational>> parts;
};

/// Replaces `sources` (pairwise homologous, at least two) by a single
/// claimant `merged_id` carrying the summed claim. `merged_id` may be one of
/// the sources or a fresh id.
struct MergeSpec {
  std::vector<std::string> sources;
  std::string merged_id;
};

/// The reduced problem after the claimants outside `spec.keep` depart with
/// their awards under x: surviving issues are those claimed by a kept
/// claimant, and each keeps its capacity minus what the departing claimants
/// took from it. Keeping everyone is the identity. Throws
/// std::invalid_argument on a bad subset and std::logic_error if departures
/// exceed a capacity (impossible for feasible x). The result is not
/// normalized: non-binding issues stay.
Problem reduce_problem(const Problem& p, const Allocation& x, const SubsetSpec& spec);

/// Splits one claimant into parts at its position in the claimant order.
/// Throws std::invalid_argument on unknown target, id collisions,
/// non-positive parts, or a part sum different from the target's claim.
Problem split_problem(const Problem& p, const SplitSpec& spec);

/// Merges homologous claimants into one at the position of `merged_id` if it
/// is a source, otherwise at the first source's position. Throws
/// std::invalid_argument when sources are not pairwise homologous, fewer
/// than two, or the merged id collides with a remaining claimant.
Problem merge_problem(const Problem& p, const MergeSpec& spec);

}  // namespace mac
