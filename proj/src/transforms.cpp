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

#include "mac/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mac {

Problem reduce_problem(const Problem& p, const Allocation& x, const SubsetSpec& spec) {
  if (spec.keep.empty()) throw std::invalid_argument("reduce: empty subset");
  if (x.size() != p.claimant_count())
    throw std::invalid_argument("reduce: allocation/claimant set mismatch");

  std::vector<bool> kept(p.claimant_count(), false);
  for (const std::string& id : spec.keep) {
    auto j = p.claimant_index(id);
    if (!j) throw std::invalid_argument("reduce: unknown claimant " + id);
    if (kept[*j]) throw std::invalid_argument("reduce: duplicate claimant " + id);
    kept[*j] = true;
  }
  // keep == N is allowed and reduces to the identity; nothing departs.

  std::vector<bool> issue_survives(p.issue_count(), false);
  for (int j = 0; j < p.claimant_count(); ++j)
    if (kept[j])
      for (int i : p.issue_set(j)) issue_survives[i] = true;

  ProblemData out;
  for (int i = 0; i < p.issue_count(); ++i) {
    if (!issue_survives[i]) continue;
    Rational cap = p.issue(i).amount;
    for (int j : p.claimants_of(i))
      if (!kept[j]) cap -= x[j];
    if (cap.is_negative())
      throw std::logic_error("reduce: departing awards exceed capacity of " + p.issue(i).id);
    out.issues.push_back({p.issue(i).id, std::move(cap)});
  }
  for (int j = 0; j < p.claimant_count(); ++j)
    if (kept[j]) out.claimants.push_back(p.claimant(j));

  return Problem::validated(std::move(out));
}

Problem split_problem(const Problem& p, const SplitSpec& spec) {
  auto tj = p.claimant_index(spec.target);
  if (!tj) throw std::invalid_argument("split: unknown claimant " + spec.target);
  if (spec.parts.empty()) throw std::invalid_argument("split: no parts");

  std::set<std::string> ids;
  for (int j = 0; j < p.claimant_count(); ++j)
    if (j != *tj) ids.insert(p.claimant(j).id);

  Rational sum;
  for (const auto& [id, claim] : spec.parts) {
    if (!claim.is_positive())
      throw std::invalid_argument("split: part " + id + " has non-positive claim");
    if (!ids.insert(id).second)
      throw std::invalid_argument("split: id collision on " + id);
    sum += claim;
  }
  if (sum != p.claimant(*tj).claim)
    throw std::invalid_argument("split: part claims sum to " + sum.str() +
                                ", expected " + p.claimant(*tj).claim.str());

  ProblemData out;
  out.issues = p.issues();
  for (int j = 0; j < p.claimant_count(); ++j) {
    if (j != *tj) {
      out.claimants.push_back(p.claimant(j));
      continue;
    }
    for (const auto& [id, claim] : spec.parts)
      out.claimants.push_back({id, claim, p.claimant(j).issues});
  }
  return Problem::validated(std::move(out));
}

Problem merge_problem(const Problem& p, const MergeSpec& spec) {
  if (spec.sources.size() < 2) throw std::invalid_argument("merge: need at least two sources");

  std::vector<int> src;
  std::set<int> seen;
  for (const std::string& id : spec.sources) {
    auto j = p.claimant_index(id);
    if (!j) throw std::invalid_argument("merge: unknown claimant " + id);
    if (!seen.insert(*j).second) throw std::invalid_argument("merge: duplicate source " + id);
    src.push_back(*j);
  }
  for (std::size_t k = 1; k < src.size(); ++k)
    if (p.issue_set(src[k]) != p.issue_set(src[0]))
      throw std::invalid_argument("merge: sources are not homologous");

  int anchor = src[0];
  for (int j : src)
    if (p.claimant(j).id == spec.merged_id) anchor = j;
  if (p.claimant(anchor).id != spec.merged_id) {
    anchor = *std::min_element(src.begin(), src.end());
    if (p.claimant_index(spec.merged_id))
      throw std::invalid_argument("merge: id collision on " + spec.merged_id);
  }

  Rational claim;
  for (int j : src) claim += p.claimant(j).claim;

  ProblemData out;
  out.issues = p.issues();
  for (int j = 0; j < p.claimant_count(); ++j) {
    if (j == anchor) {
      out.claimants.push_back({spec.merged_id, claim, p.claimant(src[0]).issues});
    } else if (!seen.contains(j)) {
      out.claimants.push_back(p.claimant(j));
    }
  }
  return Problem::validated(std::move(out));
}

}  // namespace mac
