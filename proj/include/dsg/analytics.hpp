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

#ifndef DSG_ANALYTICS_HPP_
#define DSG_ANALYTICS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dsg/simple_graph.hpp"

namespace dsg {

inline constexpr std::uint64_t kDefaultCliqueBudget = 50'000'000;
inline constexpr std::uint64_t kDefaultIsomorphismBudget = 1'000'000;

struct Components {
  std::vector<std::uint32_t> label;  // vertex -> component, numbered by first vertex
  std::size_t count = 0;
  std::vector<std::size_t> sizes;
};
Components components(const SimpleGraph& g);

// Shortest cycle length; nullopt when the graph is a forest.
std::optional<std::size_t> girth(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<std::uint32_t> witness;  // sorted vertex list
  std::uint64_t nodes = 0;             // search nodes expanded
};
// Exact maximum clique by branch and bound with greedy colouring bounds.
// Throws BudgetExhausted (carrying the best size found) once more than
// `budget` nodes are expanded.
CliqueResult max_clique(const SimpleGraph& g, std::uint64_t budget = kDefaultCliqueBudget);
// Maximum independent set through cliques of the complement, solved per
// connected component.
CliqueResult max_independent_set(const SimpleGraph& g,
                                  std::uint64_t budget = kDefaultCliqueBudget);

// Some induced K_{1,3}, as {centre, a, b, c}.
std::optional<std::array<std::uint32_t, 4>> find_claw(const SimpleGraph& g);
bool is_clawfree(const SimpleGraph& g);
bool is_cograph(const SimpleGraph& g);
std::vector<std::uint32_t> universal_vertices(const SimpleGraph& g);
// Length when the graph is a single cycle (connected, 2-regular, n >= 3).
std::optional<std::size_t> cycle_length(const SimpleGraph& g);
std::size_t triangle_count(const SimpleGraph& g);
// Some induced 4-cycle, in cyclic order.
std::optional<std::array<std::uint32_t, 4>> find_induced_c4(const SimpleGraph& g);

// Exact isomorphism test: invariant prefilter, joint colour refinement, then
// individualisation with backtracking. Throws BudgetExhausted past `budget`
// search nodes. On success `mapping`, if given, receives g1 -> g2.
bool graphs_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2,
                       std::uint64_t budget = kDefaultIsomorphismBudget,
                       std::vector<std::uint32_t>* mapping = nullptr);

// Result of the bounded search for odd holes and odd antiholes of length
// 5..max_length.
struct OddHoleScan {
  bool complete = true;  // false when the node budget ran out
  std::optional<std::vector<std::uint32_t>> hole;      // induced odd cycle
  std::optional<std::vector<std::uint32_t>> antihole;  // odd cycle in the complement
};
OddHoleScan scan_odd_holes(const SimpleGraph& g, std::size_t max_length = 11,
                           std::uint64_t budget = 20'000'000);

struct AnalysisBudgets {
  std::uint64_t clique = kDefaultCliqueBudget;
  std::uint64_t independence = kDefaultCliqueBudget;
};

// Exact invariants; clique and independence numbers are absent when their
// budget ran out, with the best lower bound found recorded instead.
struct AnalysisReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t isolated_count = 0;
  std::size_t component_count = 0;
  std::optional<std::size_t> girth;
  bool bipartite = true;
  std::optional<std::size_t> clique_number;
  std::size_t clique_lower_bound = 0;
  std::optional<std::size_t> independence_number;
  std::size_t independence_lower_bound = 0;
  bool clawfree = true;
  bool cograph = true;
  std::vector<std::uint32_t> universal_vertices;
  std::optional<std::size_t> cycle_length;
  std::vector<std::size_t> degree_sequence;  // non-increasing
};

AnalysisReport analyze(const SimpleGraph& g, const AnalysisBudgets& budgets = {});

}  // namespace dsg

#endif  // DSG_ANALYTICS_HPP_
