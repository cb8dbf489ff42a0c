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

#ifndef DSG_GRAPHS_HPP_
#define DSG_GRAPHS_HPP_

#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dsg/lattice.hpp"
#include "dsg/simple_graph.hpp"

namespace dsg {

// gamma: HK = G.  delta: <H,K> = G.  difference: delta and not gamma.
// difference_star: difference with isolated vertices removed.
enum class GraphKind { kGamma, kDelta, kDifference, kDifferenceStar };

const char* graph_kind_name(GraphKind kind);  // "gamma", "delta", "d", "dstar"
GraphKind parse_graph_kind(std::string_view name);

// One of the four graphs on the nontrivial proper subgroups of a group.
struct SubgroupGraph {
  GraphKind kind = GraphKind::kDifference;
  std::shared_ptr<const SubgroupLattice> lattice;
  std::vector<SubgroupId> vertices;  // vertex index -> subgroup id, increasing
  SimpleGraph graph;

  // Vertex index of a subgroup, if it is a vertex.
  std::optional<std::uint32_t> vertex_of(SubgroupId h) const;
};

SubgroupGraph build_graph(std::shared_ptr<const SubgroupLattice> lattice, GraphKind kind);
// Restricts a difference graph to its non-isolated vertices.
SubgroupGraph star_reduction(const SubgroupGraph& difference);

// H -> gHg^-1 as a permutation of the vertex indices of `graph`.
std::vector<std::uint32_t> conjugation_vertex_map(const SubgroupGraph& graph, ElementId g);
bool is_automorphism(const SimpleGraph& graph, std::span<const std::uint32_t> perm);

// A vertex injection from a smaller difference graph into D(G), with the
// outcome of the induced-subgraph check.
struct Embedding {
  SimpleGraph source;                 // D of the embedded group
  std::vector<SubgroupId> image;      // source vertex -> subgroup id of G
  bool injective = true;
  bool preserves_edges = true;        // u ~ v implies f(u) ~ f(v)
  bool reflects_edges = true;         // f(u) ~ f(v) implies u ~ v
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;  // offending source pair

  bool induced() const { return injective && preserves_edges && reflects_edges; }
};

// D(G/N) -> D(G), H/N -> H. Throws kNotNormal unless n is normal, and
// kInvalidArgument unless it is nontrivial and proper.
Embedding quotient_embedding(const SubgroupLattice& lattice, SubgroupId n);

// Whether k is a complement of the normal subgroup n.
bool is_complement(const SubgroupLattice& lattice, SubgroupId n, SubgroupId k);
// D(K) -> D(G), K1 -> N K1, for a complement K of a normal N. D(K) is
// formed from the subgroups of K inside the lattice of G. Throws
// kInvalidArgument when k is not a complement of n.
Embedding semidirect_embedding(const SubgroupLattice& lattice, SubgroupId n, SubgroupId k);

// Difference graph of the subgroup interval [1, top] of a lattice, i.e. of
// the group `top` itself; vertex i is the i-th nontrivial proper subgroup of
// top in id order.
SimpleGraph difference_graph_below(const SubgroupLattice& lattice, SubgroupId top,
                                   std::vector<SubgroupId>* vertices = nullptr);

}  // namespace dsg

#endif  // DSG_GRAPHS_HPP_
