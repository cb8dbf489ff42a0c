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

#include "dsg/simple_graph.hpp"

#include "dsg/error.hpp"

namespace dsg {

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorCode::kInvalidArgument, "invalid edge");
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
  adjacency_[u].reset(v);
  adjacency_[v].reset(u);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u)
    adjacency_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    });
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph c(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    c.adjacency_[v] = adjacency_[v].complement();
    c.adjacency_[v].reset(v);
  }
  return c;
}

SimpleGraph SimpleGraph::induced(std::span<const std::uint32_t> vertices) const {
  SimpleGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::relabeled(std::span<const std::uint32_t> perm) const {
  SimpleGraph g(vertex_count());
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 0; n >= 3 && v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph star_graph(std::size_t leaves) {
  SimpleGraph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace dsg
