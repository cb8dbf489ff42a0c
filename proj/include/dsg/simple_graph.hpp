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

#ifndef DSG_SIMPLE_GRAPH_HPP_
#define DSG_SIMPLE_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dsg/bitset.hpp"

namespace dsg {

// Undirected simple graph on vertices 0..n-1 with one adjacency bitset per
// vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adjacency_(n, Bitset(n)) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  // Sorted (u < v) edge list.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  SimpleGraph complement() const;
  // Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
  SimpleGraph induced(std::span<const std::uint32_t> vertices) const;
  // Maps each edge {u, v} to {perm[u], perm[v]}.
  SimpleGraph relabeled(std::span<const std::uint32_t> perm) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<Bitset> adjacency_;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph star_graph(std::size_t leaves);

}  // namespace dsg

#endif  // DSG_SIMPLE_GRAPH_HPP_
