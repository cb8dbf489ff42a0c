// Copyright 2026 The dsg Authors
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

#ifndef DSG_HARNESS_HPP_
#define DSG_HARNESS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsg/analytics.hpp"
#include "dsg/cache.hpp"
#include "dsg/classify.hpp"
#include "dsg/corpus.hpp"
#include "dsg/graphs.hpp"

namespace dsg {

struct BundleOptions {
  AnalysisBudgets budgets;
  std::filesystem::path cache_dir;  // empty: no cache
  std::uint64_t order_cap = kDefaultOrderCap;
  const ActionRegistry* actions = nullptr;
};

// Everything the checks look at for one group.
struct GroupBundle {
  std::string label;
  std::string spec_text;
  bool long_tier = false;  // order above the standard tier limit
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const SubgroupLattice> lattice;
  GroupClassification classification;
  SubgroupGraph gamma, delta, difference, difference_star;
  AnalysisReport report;  // of the difference graph
  Components dstar_components;
  std::vector<std::uint32_t> dstar_universal;
  std::optional<std::size_t> dstar_cycle_length;
  CacheOutcome cache = CacheOutcome::kDisabled;
  std::string cache_warning;
};

GroupBundle compute_bundle(const std::string& label, const GroupSpec& spec,
                           const BundleOptions& options = {});
GroupBundle compute_bundle(const std::string& label, std::shared_ptr<const FiniteGroup> group,
                           const BundleOptions& options = {});

enum class VerdictStatus { kVacuous, kConfirmed, kCounterexample, kUnverified };
const char* status_name(VerdictStatus status);

struct CheckOutcome {
  VerdictStatus status = VerdictStatus::kVacuous;
  std::vector<std::uint64_t> witness;  // subgroup ids unless noted in detail
  std::string detail;
};

struct TheoremVerdict {
  std::string theorem_id;
  std::string group_label;
  VerdictStatus status = VerdictStatus::kVacuous;
  std::vector<std::uint64_t> witness;
  std::string detail;

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  std::string hypothesis;
  std::string conclusion;
  std::string vacuity;
  CheckOutcome (*evaluate)(const GroupBundle&) = nullptr;
};

// All checks in registry order; ids are unique.
const std::vector<TheoremCheck>& theorem_registry();
const TheoremCheck* find_check(const std::string& id);

TheoremVerdict verify(const TheoremCheck& check, const GroupBundle& bundle);

struct RunOptions {
  Tier tier = Tier::kFast;
  std::vector<std::string> theorem_filter;  // empty: all
  std::size_t threads = 1;
  BundleOptions bundle;
};

struct StatusCounts {
  std::size_t vacuous = 0;
  std::size_t confirmed = 0;
  std::size_t counterexample = 0;
  std::size_t unverified = 0;

  void add(VerdictStatus s);
  friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

struct RunReport {
  std::string tier;
  std::uint64_t manifest_hash = 0;
  std::vector<std::string> groups;
  std::vector<std::string> theorems;
  std::vector<std::vector<TheoremVerdict>> matrix;  // [group][theorem]
  std::map<std::string, StatusCounts> per_theorem;
  StatusCounts total;
  std::vector<std::string> warnings;

  // 0 clean, 2 counterexample present, 3 unverified present.
  int exit_code() const;
};

// Throws Error (with the group label) when a corpus entry fails to realize.
// Throws kInvalidArgument for unknown theorem ids in the filter.
RunReport run_corpus(const Corpus& corpus, const RunOptions& options);

// Group isomorphism by backtracking over generator images. Returns nullopt
// when the budget of search leaves is exhausted.
std::optional<bool> groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                      std::uint64_t budget = 1'000'000);

struct HuntFinding {
  std::vector<std::string> groups;
  std::string status;  // supports, counterexample, outside-hypothesis, unverified
  std::string detail;
};

struct HuntReport {
  std::string id;
  std::string statement;
  std::string tier;
  std::uint64_t manifest_hash = 0;
  std::vector<HuntFinding> findings;
  std::vector<std::string> notes;
  std::map<std::string, std::size_t> counts;

  bool has_counterexample() const;
};

std::vector<std::string> hunt_ids();
HuntReport hunt(const std::string& id, const Corpus& corpus, const RunOptions& options);

struct GapScanResult {
  ActionTable action;  // images of the two Z2 generators on Z2^3
  GroupSpec spec;      // semidirect(elem_abelian(2,3), elem_abelian(2,2), <id>)
  std::size_t candidates_examined = 0;
};

// Scans commuting pairs of automorphisms of order at most two of Z2^3 in
// lexicographic matrix order and returns the first semidirect product whose
// difference graph is not bipartite and whose reduced graph is disconnected.
// Throws kInternal when none qualifies.
GapScanResult find_gap3249_action(const std::string& action_id = "gap_32_49_action");

}  // namespace dsg

#endif  // DSG_HARNESS_HPP_
