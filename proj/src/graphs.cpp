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

#include "dsg/graphs.hpp"

#include <algorithm>
#include <string>

#include "dsg/error.hpp"

namespace dsg {

const char* graph_kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::kGamma:
      return "gamma";
    case GraphKind::kDelta:
      return "delta";
    case GraphKind::kDifference:
      return "d";
    case GraphKind::kDifferenceStar:
      return "dstar";
  }
  return "?";
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "gamma") return GraphKind::kGamma;
  if (name == "delta") return GraphKind::kDelta;
  if (name == "d" || name == "difference") return GraphKind::kDifference;
  if (name == "dstar" || name == "difference_star") return GraphKind::kDifferenceStar;
  throw Error(ErrorCode::kInvalidArgument, "unknown graph kind '" + std::string(name) + "'");
}

std::optional<std::uint32_t> SubgroupGraph::vertex_of(SubgroupId h) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), h);
  if (it == vertices.end() || *it != h) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices.begin());
}

SubgroupGraph build_graph(std::shared_ptr<const SubgroupLattice> lattice, GraphKind kind) {
  if (kind == GraphKind::kDifferenceStar)
    return star_reduction(build_graph(std::move(lattice), GraphKind::kDifference));

  const SubgroupLattice& lat = *lattice;
  SubgroupGraph out;
  out.kind = kind;
  for (SubgroupId h = 1; h + 1 < lat.size(); ++h) out.vertices.push_back(h);
  const std::size_t n = out.vertices.size();
  out.graph = SimpleGraph(n);

  // <H,K> = G exactly when no maximal subgroup contains both.
  auto maximals = lat.maximal_subgroups();
  std::vector<Bitset> cover(n, Bitset(maximals.size()));
  for (std::size_t i = 0; i < maximals.size(); ++i)
    lat.subsets(maximals[i]).for_each([&](std::size_t h) {
      if (h >= 1 && h + 1 < lat.size()) cover[h - 1].set(i);
    });

  const std::uint64_t order = lat.group().order();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (cover[u].intersects(cover[v])) continue;
      bool gamma = lat.product_size(out.vertices[u], out.vertices[v]) == order;
      bool edge = kind == GraphKind::kDelta || (kind == GraphKind::kGamma) == gamma;
      if (edge) out.graph.add_edge(u, v);
    }
  }
  out.lattice = std::move(lattice);
  return out;
}

SubgroupGraph star_reduction(const SubgroupGraph& difference) {
  if (difference.kind != GraphKind::kDifference)
    throw Error(ErrorCode::kInvalidArgument, "star reduction needs a difference graph");
  SubgroupGraph out;
  out.kind = GraphKind::kDifferenceStar;
  out.lattice = difference.lattice;
  std::vector<std::uint32_t> keep;
  for (std::uint32_t v = 0; v < difference.graph.vertex_count(); ++v)
    if (difference.graph.degree(v) > 0) {
      keep.push_back(v);
      out.vertices.push_back(difference.vertices[v]);
    }
  out.graph = difference.graph.induced(keep);
  return out;
}

std::vector<std::uint32_t> conjugation_vertex_map(const SubgroupGraph& graph, ElementId g) {
  std::vector<std::uint32_t> perm(graph.vertices.size());
  for (std::size_t v = 0; v < perm.size(); ++v) {
    auto image = graph.vertex_of(graph.lattice->conjugate(graph.vertices[v], g));
    if (!image)
      throw Error(ErrorCode::kInternal, "conjugation does not preserve the vertex set");
    perm[v] = *image;
  }
  return perm;
}

bool is_automorphism(const SimpleGraph& graph, std::span<const std::uint32_t> perm) {
  const std::size_t n = graph.vertex_count();
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (graph.adjacent(u, v) != graph.adjacent(perm[u], perm[v])) return false;
  return true;
}

namespace {

bool difference_adjacent(const SubgroupLattice& lat, SubgroupId a, SubgroupId b) {
  return lat.join(a, b) == lat.whole() && lat.product_size(a, b) != lat.group().order();
}

void check_embedding(const SubgroupLattice& lat, Embedding& e) {
  const std::size_t n = e.source.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    if (e.image[u] == lat.trivial() || e.image[u] == lat.whole()) {
      e.injective = false;
      e.witness = {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u)};
      return;
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      auto pair = std::make_pair(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
      if (e.image[u] == e.image[v]) {
        e.injective = false;
        e.witness = pair;
        return;
      }
      bool source_edge = e.source.adjacent(u, v);
      bool target_edge = difference_adjacent(lat, e.image[u], e.image[v]);
      if (source_edge && !target_edge) {
        e.preserves_edges = false;
        e.witness = pair;
        return;
      }
      if (!source_edge && target_edge) {
        e.reflects_edges = false;
        e.witness = pair;
        return;
      }
    }
  }
}

}  // namespace

Embedding quotient_embedding(const SubgroupLattice& lat, SubgroupId n) {
  if (n == lat.trivial() || n == lat.whole())
    throw Error(ErrorCode::kInvalidArgument, "quotient embedding needs a nontrivial proper subgroup");
  const FiniteGroup& g = lat.group();
  QuotientGroup q = quotient_group(g, lat.subgroup(n).members);
  auto q_lattice = SubgroupLattice::build(q.group);
  SubgroupGraph q_graph = build_graph(q_lattice, GraphKind::kDifference);

  Embedding e;
  e.source = q_graph.graph;
  for (SubgroupId hbar : q_graph.vertices) {
    const Bitset& image_members = q_lattice->subgroup(hbar).members;
    Bitset preimage(g.order());
    for (ElementId x = 0; x < g.order(); ++x)
      if (image_members.test(q.projection[x])) preimage.set(x);
    auto id = lat.find(preimage);
    if (!id) throw Error(ErrorCode::kInternal, "preimage of a quotient subgroup is missing");
    e.image.push_back(*id);
  }
  check_embedding(lat, e);
  return e;
}

bool is_complement(const SubgroupLattice& lat, SubgroupId n, SubgroupId k) {
  return lat.is_normal(n) && lat.meet(n, k) == lat.trivial() &&
         lat.order(n) * lat.order(k) == lat.group().order();
}

SimpleGraph difference_graph_below(const SubgroupLattice& lat, SubgroupId top,
                                   std::vector<SubgroupId>* vertices) {
  std::vector<SubgroupId> vs;
  lat.subsets(top).for_each([&](std::size_t h) {
    if (h != lat.trivial() && h != top) vs.push_back(static_cast<SubgroupId>(h));
  });
  SimpleGraph graph(vs.size());
  for (std::size_t u = 0; u < vs.size(); ++u)
    for (std::size_t v = u + 1; v < vs.size(); ++v)
      if (lat.join(vs[u], vs[v]) == top && lat.product_size(vs[u], vs[v]) != lat.order(top))
        graph.add_edge(u, v);
  if (vertices) *vertices = std::move(vs);
  return graph;
}

Embedding semidirect_embedding(const SubgroupLattice& lat, SubgroupId n, SubgroupId k) {
  if (!is_complement(lat, n, k))
    throw Error(ErrorCode::kInvalidArgument, "subgroup is not a complement of a normal subgroup");
  std::vector<SubgroupId> k_vertices;
  Embedding e;
  e.source = difference_graph_below(lat, k, &k_vertices);
  for (SubgroupId k1 : k_vertices) e.image.push_back(lat.join(n, k1));
  check_embedding(lat, e);
  return e;
}

}  // namespace dsg
