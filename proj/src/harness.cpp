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

#include "dsg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "dsg/error.hpp"

namespace dsg {

// ---------------------------------------------------------------------------
// Bundles

GroupBundle compute_bundle(const std::string& label, std::shared_ptr<const FiniteGroup> group,
                           const BundleOptions& options) {
  GroupBundle b;
  b.label = label;
  b.group = std::move(group);
  b.long_tier = b.group->order() > tier_order_limit(Tier::kStandard);
  auto cached = load_or_build_lattice(b.group, options.cache_dir);
  b.lattice = cached.lattice;
  b.cache = cached.outcome;
  b.cache_warning = cached.warning;
  b.classification = classify(*b.lattice);
  b.gamma = build_graph(b.lattice, GraphKind::kGamma);
  b.delta = build_graph(b.lattice, GraphKind::kDelta);
  b.difference = build_graph(b.lattice, GraphKind::kDifference);
  b.difference_star = star_reduction(b.difference);
  b.report = analyze(b.difference.graph, options.budgets);
  b.dstar_components = components(b.difference_star.graph);
  b.dstar_universal = universal_vertices(b.difference_star.graph);
  b.dstar_cycle_length = cycle_length(b.difference_star.graph);
  return b;
}

GroupBundle compute_bundle(const std::string& label, const GroupSpec& spec,
                           const BundleOptions& options) {
  RealizeOptions ro;
  ro.order_cap = options.order_cap;
  ro.actions = options.actions;
  GroupBundle b = compute_bundle(label, realize(spec, ro), options);
  b.spec_text = spec.to_string();
  return b;
}

// ---------------------------------------------------------------------------
// Theorem checks

const char* status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kVacuous:
      return "vacuous";
    case VerdictStatus::kConfirmed:
      return "confirmed";
    case VerdictStatus::kCounterexample:
      return "counterexample";
    case VerdictStatus::kUnverified:
      return "unverified";
  }
  return "?";
}

namespace {

using V = VerdictStatus;

CheckOutcome vacuous(std::string detail = {}) { return {V::kVacuous, {}, std::move(detail)}; }
CheckOutcome confirmed(std::string detail = {}) { return {V::kConfirmed, {}, std::move(detail)}; }
CheckOutcome refuted(std::vector<std::uint64_t> witness, std::string detail) {
  return {V::kCounterexample, std::move(witness), std::move(detail)};
}
CheckOutcome unverified(std::string detail) { return {V::kUnverified, {}, std::move(detail)}; }

const SimpleGraph& dgraph(const GroupBundle& b) { return b.difference.graph; }
SubgroupId sub(const GroupBundle& b, std::size_t v) { return b.difference.vertices[v]; }
bool has_edge(const GroupBundle& b) { return b.report.edge_count > 0; }

std::vector<std::uint64_t> first_edge(const GroupBundle& b) {
  auto edges = dgraph(b).edges();
  if (edges.empty()) return {b.lattice->whole()};
  return {sub(b, edges[0].first), sub(b, edges[0].second)};
}

std::uint64_t non_nilpotent_witness(const GroupBundle& b) {
  if (b.classification.non_normal_sylow) return *b.classification.non_normal_sylow;
  return b.lattice->whole();
}

bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& s, std::uint32_t q) {
  bool ok = true;
  s.members.for_each([&](std::size_t e) {
    if (e != FiniteGroup::identity() && g.element_order(static_cast<ElementId>(e)) != q) ok = false;
  });
  if (!ok) return false;
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    for (std::size_t j = i + 1; j < s.generators.size(); ++j)
      if (g.mul(s.generators[i], s.generators[j]) != g.mul(s.generators[j], s.generators[i]))
        return false;
  return true;
}

// Order p^a q^b with a normal elementary abelian Sylow q-subgroup and a
// cyclic maximal Sylow p-subgroup; `single_q` additionally demands b = 1.
// Returns the (p, q) assignment that fits.
std::optional<std::pair<std::uint32_t, std::uint32_t>> semidirect_shape(const SubgroupLattice& lat,
                                                                        bool single_q) {
  auto primes = lat.primes();
  if (primes.size() != 2) return std::nullopt;
  const FiniteGroup& g = lat.group();
  for (int swap = 0; swap < 2; ++swap) {
    std::uint32_t p = primes[swap], q = primes[1 - swap];
    auto qs = lat.sylow_subgroups(q);
    auto ps = lat.sylow_subgroups(p);
    if (qs.size() != 1) continue;
    const Subgroup& Q = lat.subgroup(qs[0]);
    if (single_q && Q.order != q) continue;
    if (!is_elementary_abelian(g, Q, q)) continue;
    const Subgroup& P = lat.subgroup(ps[0]);
    if (!lat.is_maximal(ps[0])) continue;
    bool cyclic = false;
    P.members.for_each([&](std::size_t e) {
      if (g.element_order(static_cast<ElementId>(e)) == P.order) cyclic = true;
    });
    if (!cyclic) continue;
    return std::make_pair(p, q);
  }
  return std::nullopt;
}

CheckOutcome check_normal_isolated(const GroupBundle& b) {
  const auto& lat = *b.lattice;
  std::size_t seen = 0;
  for (std::size_t v = 0; v < dgraph(b).vertex_count(); ++v) {
    if (!lat.is_normal(sub(b, v))) continue;
    ++seen;
    if (dgraph(b).degree(v) > 0) return refuted({sub(b, v)}, "normal subgroup has a neighbour");
  }
  if (seen == 0) return vacuous("no nontrivial proper normal subgroup");
  return confirmed(std::to_string(seen) + " normal subgroups isolated");
}

CheckOutcome check_maximal_conjugates(const GroupBundle& b) {
  const auto& lat = *b.lattice;
  std::size_t seen = 0;
  for (SubgroupId m : lat.maximal_subgroups()) {
    if (lat.is_normal(m)) continue;
    ++seen;
    auto vm = *b.difference.vertex_of(m);
    for (SubgroupId c : lat.conjugates(m)) {
      if (c == m) continue;
      if (!dgraph(b).adjacent(vm, *b.difference.vertex_of(c)))
        return refuted({m, c}, "maximal subgroup not adjacent to a conjugate");
    }
  }
  if (seen == 0) return vacuous("every maximal subgroup is normal");
  return confirmed(std::to_string(seen) + " non-normal maximal subgroups");
}

CheckOutcome check_conjugation_automorphism(const GroupBundle& b) {
  if (dgraph(b).vertex_count() == 0) return vacuous("no vertices");
  const SubgroupGraph* graphs[] = {&b.gamma, &b.delta, &b.difference, &b.difference_star};
  const auto& gens = b.group->generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const SubgroupGraph* sg : graphs) {
      auto map = conjugation_vertex_map(*sg, gens[i]);
      if (!is_automorphism(sg->graph, map))
        return refuted({i}, std::string("conjugation by generator ") + std::to_string(i) +
                                " is not an automorphism of " + graph_kind_name(sg->kind));
    }
  return confirmed(std::to_string(gens.size()) + " generators on 4 graphs");
}

CheckOutcome check_no_leaves(const GroupBundle& b) {
  if (!has_edge(b)) return vacuous("edgeless");
  for (std::size_t v = 0; v < dgraph(b).vertex_count(); ++v)
    if (dgraph(b).degree(v) == 1) return refuted({sub(b, v)}, "vertex of degree 1");
  return confirmed();
}

CheckOutcome check_degree_multiplicity(const GroupBundle& b) {
  if (!has_edge(b)) return vacuous("edgeless");
  std::map<std::size_t, std::size_t> freq;
  for (std::size_t v = 0; v < dgraph(b).vertex_count(); ++v) ++freq[dgraph(b).degree(v)];
  for (std::size_t v = 0; v < dgraph(b).vertex_count(); ++v) {
    auto d = dgraph(b).degree(v);
    if (d > 0 && freq[d] < 2)
      return refuted({sub(b, v)}, "degree " + std::to_string(d) + " occurs once");
  }
  return confirmed();
}

constexpr std::size_t kEmbeddingCap = 32;

CheckOutcome check_semidirect_embedding(const GroupBundle& b) {
  const auto& lat = *b.lattice;
  std::size_t pairs = 0;
  for (SubgroupId n : lat.normal_subgroups()) {
    if (n == lat.trivial() || n == lat.whole()) continue;
    for (SubgroupId k = 1; k < lat.whole() && pairs < kEmbeddingCap; ++k) {
      if (lat.order(n) * lat.order(k) != lat.group().order()) continue;
      if (!is_complement(lat, n, k)) continue;
      ++pairs;
      Embedding e = semidirect_embedding(lat, n, k);
      if (!e.induced()) {
        std::vector<std::uint64_t> w{n, k};
        if (e.witness) {
          w.push_back(e.image[e.witness->first]);
          w.push_back(e.image[e.witness->second]);
        }
        return refuted(w, "complement graph does not embed as an induced subgraph");
      }
    }
    if (pairs >= kEmbeddingCap) break;
  }
  if (pairs == 0) return vacuous("no complemented normal subgroup");
  return confirmed(std::to_string(pairs) + " complement pairs");
}

CheckOutcome check_quotient_embedding(const GroupBundle& b) {
  const auto& lat = *b.lattice;
  std::size_t seen = 0;
  for (SubgroupId n : lat.normal_subgroups()) {
    if (n == lat.trivial() || n == lat.whole()) continue;
    if (seen >= kEmbeddingCap) break;
    ++seen;
    Embedding e = quotient_embedding(lat, n);
    if (!e.induced()) {
      std::vector<std::uint64_t> w{n};
      if (e.witness) {
        w.push_back(e.image[e.witness->first]);
        w.push_back(e.image[e.witness->second]);
      }
      return refuted(w, "quotient graph does not embed as an induced subgraph");
    }
  }
  if (seen == 0) return vacuous("no nontrivial proper normal subgroup");
  return confirmed(std::to_string(seen) + " quotients");
}

CheckOutcome check_edge_minima(const GroupBundle& b) {
  if (!has_edge(b)) return vacuous("edgeless");
  const auto& lat = *b.lattice;
  const std::size_t edges = b.report.edge_count;
  for (auto [u, v] : dgraph(b).edges()) {
    bool conj = lat.conjugacy_class(sub(b, u)) == lat.conjugacy_class(sub(b, v));
    std::size_t need = conj ? 3 : 4;
    if (edges < need)
      return refuted({sub(b, u), sub(b, v)},
                     std::string(conj ? "conjugate" : "non-conjugate") + " edge with only " +
                         std::to_string(edges) + " edges");
  }
  return confirmed();
}

CheckOutcome check_nilpotent_no_conjugate_edge(const GroupBundle& b) {
  if (!b.classification.nilpotent) return vacuous("not nilpotent");
  const auto& lat = *b.lattice;
  for (auto [u, v] : dgraph(b).edges())
    if (lat.conjugacy_class(sub(b, u)) == lat.conjugacy_class(sub(b, v)))
      return refuted({sub(b, u), sub(b, v)}, "conjugate subgroups adjacent");
  return confirmed();
}

CheckOutcome check_nilpotent_induced_c4(const GroupBundle& b) {
  if (!b.classification.nilpotent) return vacuous("not nilpotent");
  if (!has_edge(b)) return vacuous("edgeless");
  if (!find_induced_c4(dgraph(b))) return refuted(first_edge(b), "no induced 4-cycle");
  return confirmed();
}

CheckOutcome check_connected_iff_simple(const GroupBundle& b) {
  if (dgraph(b).vertex_count() < 2) return vacuous("fewer than 2 vertices");
  bool connected = b.report.component_count == 1;
  bool simple = b.classification.simple;
  if (connected == simple)
    return confirmed(connected ? "connected and simple" : "disconnected and not simple");
  if (connected) {
    std::uint64_t w = b.classification.proper_normal_subgroup.value_or(b.lattice->whole());
    return refuted({w}, "connected but not simple");
  }
  auto comps = components(dgraph(b));
  for (std::size_t v = 0; v < dgraph(b).vertex_count(); ++v)
    if (comps.label[v] != 0) return refuted({sub(b, v)}, "simple but disconnected");
  return refuted({b.lattice->whole()}, "simple but disconnected");
}

CheckOutcome check_triangle_free_nilpotent(const GroupBundle& b) {
  bool triangle_free = !(b.report.girth && *b.report.girth == 3);
  if (!triangle_free) return vacuous("has a triangle");
  if (!b.classification.nilpotent)
    return refuted({non_nilpotent_witness(b)}, "triangle-free but not nilpotent");
  return confirmed(b.report.bipartite ? "bipartite and nilpotent" : "triangle-free and nilpotent");
}

CheckOutcome check_edgeless_nilpotent(const GroupBundle& b) {
  if (has_edge(b)) return vacuous("has an edge");
  if (!b.classification.nilpotent)
    return refuted({non_nilpotent_witness(b)}, "edgeless but not nilpotent");
  return confirmed();
}

CheckOutcome check_girth(const GroupBundle& b) {
  if (!has_edge(b)) return vacuous("edgeless");
  auto g = b.report.girth;
  if (g && (*g == 3 || *g == 4)) return confirmed("girth " + std::to_string(*g));
  return refuted(first_edge(b), g ? "girth " + std::to_string(*g) : "acyclic");
}

CheckOutcome check_not_cycle(const GroupBundle& b) {
  if (dgraph(b).vertex_count() < 3) return vacuous("fewer than 3 vertices");
  if (b.report.cycle_length) {
    std::vector<std::uint64_t> w;
    for (auto h : b.difference.vertices) w.push_back(h);
    return refuted(w, "the graph is a cycle");
  }
  return confirmed();
}

CheckOutcome check_no_universal(const GroupBundle& b) {
  if (dgraph(b).vertex_count() < 2) return vacuous("fewer than 2 vertices");
  if (!b.report.universal_vertices.empty())
    return refuted({sub(b, b.report.universal_vertices[0])}, "universal vertex");
  return confirmed();
}

std::vector<std::uint64_t> dstar_vertex(const GroupBundle& b, std::uint32_t v) {
  return {b.difference_star.vertices[v]};
}

CheckOutcome check_dstar_universal(const GroupBundle& b) {
  if (b.dstar_universal.empty()) return vacuous("no universal vertex in the reduced graph");
  auto shape = semidirect_shape(*b.lattice, false);
  if (!shape) return refuted(dstar_vertex(b, b.dstar_universal[0]), "group lacks the required shape");
  return confirmed("p=" + std::to_string(shape->first) + " q=" + std::to_string(shape->second));
}

bool dstar_complete(const GroupBundle& b) {
  std::size_t n = b.difference_star.graph.vertex_count();
  return n > 0 && b.difference_star.graph.edge_count() == n * (n - 1) / 2;
}

CheckOutcome check_dstar_complete(const GroupBundle& b) {
  if (!dstar_complete(b)) return vacuous("reduced graph not complete");
  auto shape = semidirect_shape(*b.lattice, true);
  if (!shape) return refuted(dstar_vertex(b, 0), "group lacks the required shape");
  return confirmed("p=" + std::to_string(shape->first) + " q=" + std::to_string(shape->second));
}

CheckOutcome check_dstar_complete_count(const GroupBundle& b) {
  if (!dstar_complete(b)) return vacuous("reduced graph not complete");
  auto shape = semidirect_shape(*b.lattice, true);
  if (!shape) return refuted(dstar_vertex(b, 0), "group lacks the required shape");
  auto [p, q] = *shape;
  std::size_t n = b.difference_star.graph.vertex_count();
  std::size_t np = b.lattice->sylow_subgroups(p).size();
  if (n != np || np != q)
    return refuted(dstar_vertex(b, 0), "vertices=" + std::to_string(n) + " n_p=" +
                                           std::to_string(np) + " q=" + std::to_string(q));
  return confirmed("vertices = n_p = " + std::to_string(q));
}

CheckOutcome check_dstar_cycle(const GroupBundle& b) {
  if (!b.dstar_cycle_length) return vacuous("reduced graph is not a cycle");
  auto len = *b.dstar_cycle_length;
  if (len == 3 || len == 4) return confirmed("cycle of length " + std::to_string(len));
  return refuted(dstar_vertex(b, 0), "cycle of length " + std::to_string(len));
}

CheckOutcome check_clawfree(const GroupBundle& b) {
  if (!b.report.clawfree) return vacuous("contains a claw");
  if (!b.classification.supersolvable) {
    std::uint64_t w = b.classification.non_prime_index_maximal.value_or(b.lattice->whole());
    return refuted({w}, "claw-free but not supersolvable");
  }
  return confirmed();
}

CheckOutcome check_cograph(const GroupBundle& b) {
  if (!b.report.cograph) return vacuous("contains an induced P4");
  if (!b.classification.solvable) return refuted({b.lattice->whole()}, "cograph but not solvable");
  return confirmed();
}

// Material conditional "has an edge and alpha <= bound implies conclusion".
CheckOutcome independence_bound(const GroupBundle& b, std::size_t bound, bool conclusion,
                                 const char* failure) {
  if (!has_edge(b)) return vacuous("edgeless");
  std::string alpha;
  if (b.report.independence_number) {
    if (*b.report.independence_number > bound)
      return vacuous("independence number " + std::to_string(*b.report.independence_number));
    alpha = std::to_string(*b.report.independence_number);
  } else {
    if (b.report.independence_lower_bound > bound)
      return vacuous("independence number >= " + std::to_string(b.report.independence_lower_bound));
    if (conclusion)
      return unverified("independence budget exhausted; conclusion holds regardless");
    return unverified("independence budget exhausted at lower bound " +
                      std::to_string(b.report.independence_lower_bound));
  }
  if (!conclusion) return refuted(first_edge(b), std::string(failure) + " with independence number " + alpha);
  return confirmed("independence number " + alpha);
}

CheckOutcome check_alpha5(const GroupBundle& b) {
  return independence_bound(b, 5, !b.classification.nilpotent, "nilpotent");
}
CheckOutcome check_alpha13(const GroupBundle& b) {
  return independence_bound(b, 13, b.classification.p_group || !b.classification.nilpotent,
                            "nilpotent non-p-group");
}
CheckOutcome check_alpha3(const GroupBundle& b) {
  return independence_bound(b, 3, b.classification.supersolvable, "not supersolvable");
}
CheckOutcome check_alpha14(const GroupBundle& b) {
  return independence_bound(b, 14, b.classification.solvable, "not solvable");
}

CheckOutcome clique_bound(const GroupBundle& b, std::size_t bound, bool conclusion,
                          const char* failure) {
  std::string omega;
  if (b.report.clique_number) {
    if (*b.report.clique_number > bound)
      return vacuous("clique number " + std::to_string(*b.report.clique_number));
    omega = std::to_string(*b.report.clique_number);
  } else {
    if (b.report.clique_lower_bound > bound)
      return vacuous("clique number >= " + std::to_string(b.report.clique_lower_bound));
    return unverified("clique budget exhausted at lower bound " +
                      std::to_string(b.report.clique_lower_bound));
  }
  if (!conclusion)
    return refuted({b.lattice->whole()}, std::string(failure) + " with clique number " + omega);
  return confirmed("clique number " + omega);
}

CheckOutcome check_omega4(const GroupBundle& b) {
  return clique_bound(b, 4, b.classification.supersolvable, "not supersolvable");
}
CheckOutcome check_omega7(const GroupBundle& b) {
  return clique_bound(b, 7, b.classification.solvable, "not solvable");
}

std::vector<TheoremCheck> make_registry() {
  return {
      {"T-2.2a", "Nontrivial proper normal subgroups are isolated vertices.",
       "H is a nontrivial proper normal subgroup", "H is isolated",
       "no nontrivial proper normal subgroup", check_normal_isolated},
      {"T-2.2b", "A non-normal maximal subgroup is adjacent to each of its other conjugates.",
       "M is maximal and not normal", "M is adjacent to every conjugate other than M",
       "every maximal subgroup is normal", check_maximal_conjugates},
      {"T-2.2c", "Conjugation by any element is an automorphism of each subgroup graph.",
       "g is a group generator", "H -> gHg^-1 is an automorphism of gamma, delta, D and D*",
       "the graphs have no vertices", check_conjugation_automorphism},
      {"T-2.2d", "The difference graph has no leaf.", "D(G) has an edge",
       "no vertex has degree 1", "D(G) is edgeless", check_no_leaves},
      {"T-2.2e", "No non-isolated vertex has a degree shared by no other vertex.",
       "D(G) has an edge", "each positive degree occurs at least twice", "D(G) is edgeless",
       check_degree_multiplicity},
      {"T-2.2f", "For G = N x| K the graph D(K) is an induced subgraph of D(G) via K1 -> NK1.",
       "N is normal with complement K (first 32 pairs)", "K1 -> NK1 is an induced embedding",
       "no complemented nontrivial proper normal subgroup", check_semidirect_embedding},
      {"T-2.2g", "For N normal the graph D(G/N) is an induced subgraph of D(G).",
       "N is a nontrivial proper normal subgroup (first 32)",
       "H/N -> H is an induced embedding", "no nontrivial proper normal subgroup",
       check_quotient_embedding},
      {"T-2.3", "An edge between conjugates forces at least 3 edges; otherwise at least 4.",
       "D(G) has an edge", "edge count >= 3, or >= 4 for a non-conjugate edge",
       "D(G) is edgeless", check_edge_minima},
      {"T-2.4a", "In a nilpotent group conjugate subgroups are never adjacent.", "G nilpotent",
       "no edge joins two conjugates", "G is not nilpotent", check_nilpotent_no_conjugate_edge},
      {"T-2.4b", "For nilpotent G, an edge forces an induced 4-cycle.",
       "G nilpotent and D(G) has an edge", "D(G) has an induced C4",
       "G is not nilpotent or D(G) is edgeless", check_nilpotent_induced_c4},
      {"T-2.5", "D(G) is connected exactly when G is simple.", "always",
       "connected iff simple", "D(G) has fewer than 2 vertices", check_connected_iff_simple},
      {"T-2.6", "A triangle-free (in particular bipartite) difference graph forces nilpotency.",
       "D(G) is triangle-free", "G nilpotent", "D(G) has a triangle",
       check_triangle_free_nilpotent},
      {"T-2.7", "An edgeless difference graph forces nilpotency.", "D(G) is edgeless",
       "G nilpotent", "D(G) has an edge", check_edgeless_nilpotent},
      {"T-2.8", "A difference graph with an edge has girth 3 or 4.", "D(G) has an edge",
       "girth is 3 or 4", "D(G) is edgeless", check_girth},
      {"T-2.9", "D(G) is never a cycle.", "D(G) has at least 3 vertices", "D(G) is not a cycle",
       "D(G) has fewer than 3 vertices", check_not_cycle},
      {"T-2.10", "D(G) has no universal vertex.", "D(G) has at least 2 vertices",
       "no universal vertex", "D(G) has fewer than 2 vertices", check_no_universal},
      {"T-3.1",
       "A universal vertex in D*(G) forces |G| = p^a q^b with a normal elementary abelian "
       "Sylow q-subgroup and a cyclic maximal Sylow p-subgroup.",
       "D*(G) has a universal vertex", "the stated shape holds for some prime assignment",
       "D*(G) has no universal vertex", check_dstar_universal},
      {"T-3.2", "A complete D*(G) forces the same shape with a Sylow q-subgroup of order q.",
       "D*(G) is complete and nonempty", "the shape holds with b = 1",
       "D*(G) is empty or not complete", check_dstar_complete},
      {"T-3.3", "A complete D*(G) has n_p = q vertices.", "D*(G) is complete and nonempty",
       "|V(D*)| = n_p = q", "D*(G) is empty or not complete", check_dstar_complete_count},
      {"T-3.4", "If D*(G) is a cycle then its length is 3 or 4.", "D*(G) is a cycle",
       "length 3 or 4", "D*(G) is not a cycle", check_dstar_cycle},
      {"T-4.1", "A claw-free difference graph forces supersolvability.", "D(G) is claw-free",
       "G supersolvable", "D(G) contains an induced claw", check_clawfree},
      {"T-4.2", "A cograph difference graph forces solvability.", "D(G) is a cograph",
       "G solvable", "D(G) contains an induced P4", check_cograph},
      {"T-5.1", "An edge with independence number at most 5 rules out nilpotency.",
       "D(G) has an edge and alpha <= 5", "G not nilpotent",
       "edgeless, or alpha > 5 (or its lower bound exceeds 5)", check_alpha5},
      {"T-5.2", "An edge with independence number at most 13 forces a p-group or non-nilpotency.",
       "D(G) has an edge and alpha <= 13", "G is a p-group or not nilpotent",
       "edgeless, or alpha > 13 (or its lower bound exceeds 13)", check_alpha13},
      {"T-5.3", "An edge with independence number at most 3 forces supersolvability.",
       "D(G) has an edge and alpha <= 3", "G supersolvable",
       "edgeless, or alpha > 3 (or its lower bound exceeds 3)", check_alpha3},
      {"T-5.4", "An edge with independence number at most 14 forces solvability.",
       "D(G) has an edge and alpha <= 14", "G solvable",
       "edgeless, or alpha > 14 (or its lower bound exceeds 14)", check_alpha14},
      {"T-6.1", "Clique number at most 4 forces supersolvability.", "omega <= 4",
       "G supersolvable", "omega > 4 (or its lower bound exceeds 4)", check_omega4},
      {"T-6.2", "Clique number at most 7 forces solvability.", "omega <= 7", "G solvable",
       "omega > 7 (or its lower bound exceeds 7)", check_omega7},
  };
}

}  // namespace

const std::vector<TheoremCheck>& theorem_registry() {
  static const std::vector<TheoremCheck> registry = make_registry();
  return registry;
}

const TheoremCheck* find_check(const std::string& id) {
  for (const auto& c : theorem_registry())
    if (c.id == id) return &c;
  return nullptr;
}

TheoremVerdict verify(const TheoremCheck& check, const GroupBundle& bundle) {
  CheckOutcome out = check.evaluate(bundle);
  if (out.status == V::kCounterexample && out.witness.empty())
    throw Error(ErrorCode::kInternal, check.id + ": counterexample without witness");
  return {check.id, bundle.label, out.status, std::move(out.witness), std::move(out.detail)};
}

void StatusCounts::add(VerdictStatus s) {
  switch (s) {
    case V::kVacuous:
      ++vacuous;
      break;
    case V::kConfirmed:
      ++confirmed;
      break;
    case V::kCounterexample:
      ++counterexample;
      break;
    case V::kUnverified:
      ++unverified;
      break;
  }
}

int RunReport::exit_code() const {
  if (total.counterexample) return 2;
  if (total.unverified) return 3;
  return 0;
}

namespace {

// Runs f(i) for i in [0, n) on up to `threads` workers. Exceptions are
// rethrown after all workers finish, lowest index first.
template <class F>
void parallel_for(std::size_t n, std::size_t threads, F&& f) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

GroupBundle bundle_for(const CorpusEntry& entry, const Corpus& corpus, const RunOptions& options) {
  BundleOptions bo = options.bundle;
  if (!bo.actions) bo.actions = &corpus.actions;
  try {
    return compute_bundle(entry.label, entry.spec, bo);
  } catch (const BudgetExhausted&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), entry.label + ": " + e.what());
  }
}

std::vector<const TheoremCheck*> selected_checks(const std::vector<std::string>& filter) {
  std::vector<const TheoremCheck*> out;
  if (filter.empty()) {
    for (const auto& c : theorem_registry()) out.push_back(&c);
    return out;
  }
  std::set<std::string> wanted(filter.begin(), filter.end());
  for (const auto& id : wanted)
    if (!find_check(id)) throw Error(ErrorCode::kInvalidArgument, "unknown theorem id '" + id + "'");
  for (const auto& c : theorem_registry())
    if (wanted.count(c.id)) out.push_back(&c);
  return out;
}

}  // namespace

RunReport run_corpus(const Corpus& corpus, const RunOptions& options) {
  RunReport report;
  report.tier = tier_name(options.tier);
  report.manifest_hash = corpus.manifest_hash;
  auto checks = selected_checks(options.theorem_filter);
  auto entries = corpus.tier_entries(options.tier);
  for (const auto* c : checks) {
    report.theorems.push_back(c->id);
    report.per_theorem[c->id];
  }
  for (const auto& e : entries) report.groups.push_back(e.label);
  report.matrix.resize(entries.size());
  std::vector<std::string> warnings(entries.size());

  parallel_for(entries.size(), options.threads, [&](std::size_t i) {
    GroupBundle b = bundle_for(entries[i], corpus, options);
    warnings[i] = b.cache_warning;
    auto& row = report.matrix[i];
    for (const auto* c : checks) row.push_back(verify(*c, b));
  });

  for (const auto& row : report.matrix)
    for (const auto& v : row) {
      report.per_theorem[v.theorem_id].add(v.status);
      report.total.add(v.status);
    }
  for (auto& w : warnings)
    if (!w.empty()) report.warnings.push_back(std::move(w));
  return report;
}

// ---------------------------------------------------------------------------
// Group isomorphism

std::optional<bool> groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                      std::uint64_t budget) {
  if (a.order() != b.order()) return false;
  const std::size_t n = a.order();
  std::map<std::uint32_t, std::size_t> ha, hb;
  for (ElementId e = 0; e < n; ++e) {
    ++ha[a.element_order(e)];
    ++hb[b.element_order(e)];
  }
  if (ha != hb) return false;

  std::vector<ElementId> gens;
  for (ElementId g : a.generator_ids())
    if (g != FiniteGroup::identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  if (gens.empty()) return true;

  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (ElementId e = 0; e < n; ++e)
      if (b.element_order(e) == a.element_order(gens[i])) candidates[i].push_back(e);

  std::vector<ElementId> image(gens.size());
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<ElementId> map(n);
  std::vector<char> assigned(n), hit(n);
  std::vector<ElementId> queue;

  auto extends = [&]() {
    std::fill(assigned.begin(), assigned.end(), 0);
    std::fill(hit.begin(), hit.end(), 0);
    queue.assign(1, FiniteGroup::identity());
    map[0] = FiniteGroup::identity();
    assigned[0] = 1;
    hit[0] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      ElementId x = queue[qi];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        ElementId x2 = a.mul(gens[i], x);
        ElementId y2 = b.mul(image[i], map[x]);
        if (assigned[x2]) {
          if (map[x2] != y2) return false;
          continue;
        }
        if (hit[y2]) return false;
        assigned[x2] = 1;
        hit[y2] = 1;
        map[x2] = y2;
        queue.push_back(x2);
      }
    }
    return queue.size() == n;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    if (i == gens.size()) return extends();
    for (ElementId c : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        bool ca = a.mul(gens[i], gens[j]) == a.mul(gens[j], gens[i]);
        bool cb = b.mul(c, image[j]) == b.mul(image[j], c);
        ok = ca == cb && a.element_order(a.mul(gens[i], gens[j])) ==
                             b.element_order(b.mul(c, image[j]));
      }
      if (!ok) continue;
      image[i] = c;
      if (search(i + 1)) return true;
      if (exhausted) return false;
    }
    return false;
  };
  bool found = search(0);
  if (found) return true;
  if (exhausted) return std::nullopt;
  return false;
}

// ---------------------------------------------------------------------------
// Hunts

bool HuntReport::has_counterexample() const {
  auto it = counts.find("counterexample");
  return it != counts.end() && it->second > 0;
}

std::vector<std::string> hunt_ids() { return {"H-1", "H-2", "H-3", "H-4", "H-5"}; }

namespace {

struct HuntSummary {
  std::string label;
  std::shared_ptr<const FiniteGroup> group;
  SimpleGraph d;
  GroupClassification cls;
  bool connected = false;
  bool dstar_connected = false;
  std::size_t dstar_vertices = 0;
  bool nonbipartite = false;
  std::optional<std::size_t> girth;
  std::optional<std::size_t> clique;
  std::size_t clique_lower = 0;
  std::vector<std::size_t> degrees;
};

const char* hunt_statement(const std::string& id) {
  if (id == "H-1") return "If G is not nilpotent then D*(G) is connected.";
  if (id == "H-2") return "For an odd prime p, a p-group whose difference graph has an edge has girth 3.";
  if (id == "H-3")
    return "(a) If D(G) and D(H) are isomorphic and connected then G and H are isomorphic; "
           "(b) if D(G) and D(H) are isomorphic and G is nilpotent then H is nilpotent.";
  if (id == "H-4")
    return "If D(G) is perfect then G is solvable (bounded-check only: no odd hole or odd "
           "antihole of length at most 11).";
  if (id == "H-5") return "Clique number at most 15 forces solvability.";
  throw Error(ErrorCode::kInvalidArgument, "unknown hunt id '" + id + "'");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

HuntReport hunt(const std::string& id, const Corpus& corpus, const RunOptions& options) {
  HuntReport report;
  report.id = id;
  report.statement = hunt_statement(id);
  report.tier = tier_name(options.tier);
  report.manifest_hash = corpus.manifest_hash;
  auto entries = corpus.tier_entries(options.tier);

  std::vector<HuntSummary> summaries(entries.size());
  std::vector<std::optional<HuntFinding>> per_group(entries.size());
  parallel_for(entries.size(), options.threads, [&](std::size_t i) {
    GroupBundle b = bundle_for(entries[i], corpus, options);
    HuntSummary& s = summaries[i];
    s.label = b.label;
    s.group = b.group;
    s.d = b.difference.graph;
    s.cls = b.classification;
    s.connected = b.report.component_count == 1 && b.report.vertex_count >= 2;
    s.dstar_vertices = b.difference_star.graph.vertex_count();
    s.dstar_connected = b.dstar_components.count <= 1;
    s.nonbipartite = !b.report.bipartite;
    s.girth = b.report.girth;
    s.clique = b.report.clique_number;
    s.clique_lower = b.report.clique_lower_bound;
    s.degrees = b.report.degree_sequence;

    HuntFinding f;
    f.groups = {b.label};
    if (id == "H-1") {
      std::string shape = "D* has " + std::to_string(s.dstar_vertices) + " vertices, " +
                          (s.dstar_connected ? "connected" : "disconnected");
      if (s.cls.nilpotent) {
        f.status = "outside-hypothesis";
        f.detail = "nilpotent; " + shape;
      } else {
        f.status = s.dstar_connected ? "supports" : "counterexample";
        f.detail = "not nilpotent; " + shape;
      }
    } else if (id == "H-2") {
      bool odd_p = s.cls.p_group && s.cls.p % 2 == 1;
      bool edge = b.report.edge_count > 0;
      std::string g = s.girth ? std::to_string(*s.girth) : std::string("inf");
      if (!odd_p || !edge) {
        f.status = "outside-hypothesis";
        f.detail = std::string(odd_p ? "odd p-group, edgeless" : "not an odd p-group");
      } else {
        f.status = s.girth == std::optional<std::size_t>(3) ? "supports" : "counterexample";
        f.detail = "p=" + std::to_string(s.cls.p) + ", girth " + g;
      }
    } else if (id == "H-4") {
      OddHoleScan scan = scan_odd_holes(b.difference.graph);
      if (scan.hole || scan.antihole) {
        f.status = "outside-hypothesis";
        f.detail = std::string("odd ") + (scan.hole ? "hole" : "antihole") + " of length " +
                   std::to_string(scan.hole ? scan.hole->size() : scan.antihole->size());
      } else if (!scan.complete) {
        f.status = "unverified";
        f.detail = "odd-hole scan budget exhausted";
      } else {
        f.status = s.cls.solvable ? "supports" : "counterexample";
        f.detail = std::string("bounded-check only: no odd hole or antihole up to length 11; ") +
                   (s.cls.solvable ? "solvable" : "not solvable");
      }
    } else if (id == "H-5") {
      if (s.clique) {
        if (*s.clique > 15) {
          f.status = "outside-hypothesis";
        } else {
          f.status = s.cls.solvable ? "supports" : "counterexample";
        }
        f.detail = "clique number " + std::to_string(*s.clique) + ", solvable " +
                   yesno(s.cls.solvable);
      } else if (s.clique_lower > 15) {
        f.status = "outside-hypothesis";
        f.detail = "clique number >= " + std::to_string(s.clique_lower);
      } else {
        f.status = "unverified";
        f.detail = "clique budget exhausted at lower bound " + std::to_string(s.clique_lower);
      }
    } else {
      return;  // pairwise hunt, handled below
    }
    per_group[i] = std::move(f);
  });

  if (id == "H-3") {
    std::vector<std::string> connected_groups;
    for (const auto& s : summaries)
      if (s.connected && s.d.vertex_count() >= 2) connected_groups.push_back(s.label);
    std::string note = "coverage: connected difference graphs in this tier: ";
    for (std::size_t i = 0; i < connected_groups.size(); ++i)
      note += (i ? ", " : "") + connected_groups[i];
    if (connected_groups.empty()) note += "none";
    note += "; part (a) can only be exercised on pairs among these groups";
    report.notes.push_back(note);

    struct Pair {
      std::size_t i, j;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < summaries.size(); ++i)
      for (std::size_t j = i + 1; j < summaries.size(); ++j) {
        const auto& a = summaries[i];
        const auto& c = summaries[j];
        if (a.d.vertex_count() != c.d.vertex_count() || a.degrees != c.degrees) continue;
        if (a.d.vertex_count() == 0) continue;
        pairs.push_back({i, j});
      }
    std::vector<std::optional<HuntFinding>> pair_findings(pairs.size());
    parallel_for(pairs.size(), options.threads, [&](std::size_t k) {
      const auto& a = summaries[pairs[k].i];
      const auto& c = summaries[pairs[k].j];
      HuntFinding f;
      f.groups = {a.label, c.label};
      bool iso = false;
      try {
        iso = graphs_isomorphic(a.d, c.d);
      } catch (const BudgetExhausted&) {
        f.status = "unverified";
        f.detail = "graph isomorphism budget exhausted";
        pair_findings[k] = std::move(f);
        return;
      }
      if (!iso) return;
      std::string edges = std::to_string(a.d.edge_count()) + " edges";
      std::vector<std::string> parts;
      std::string status = "outside-hypothesis";
      auto raise = [&](const std::string& s) {
        if (s == "counterexample" || status == "counterexample")
          status = "counterexample";
        else if (s == "unverified" || status == "unverified")
          status = "unverified";
        else if (s == "supports" || status == "supports")
          status = "supports";
      };
      if (a.connected && c.connected) {
        auto gi = groups_isomorphic(*a.group, *c.group);
        if (!gi) {
          raise("unverified");
          parts.push_back("(a) group isomorphism search exhausted");
        } else {
          raise(*gi ? "supports" : "counterexample");
          parts.push_back(std::string("(a) groups ") + (*gi ? "isomorphic" : "not isomorphic"));
        }
      } else {
        parts.push_back("(a) graphs not connected");
      }
      if (a.cls.nilpotent || c.cls.nilpotent) {
        bool both = a.cls.nilpotent && c.cls.nilpotent;
        raise(both ? "supports" : "counterexample");
        parts.push_back(std::string("(b) nilpotent: ") + yesno(a.cls.nilpotent) + "/" +
                        yesno(c.cls.nilpotent));
      } else {
        parts.push_back("(b) neither nilpotent");
      }
      f.status = status;
      f.detail = "isomorphic difference graphs with " + edges;
      for (const auto& p : parts) f.detail += "; " + p;
      pair_findings[k] = std::move(f);
    });
    for (auto& f : pair_findings)
      if (f) report.findings.push_back(std::move(*f));
  } else {
    for (auto& f : per_group)
      if (f) report.findings.push_back(std::move(*f));
  }

  if (id == "H-1")
    for (const auto& s : summaries)
      if (s.cls.nilpotent && !s.dstar_connected && s.dstar_vertices > 0)
        report.notes.push_back(s.label +
                               ": nilpotent with disconnected D*, so the hypothesis excludes it");
  if (id == "H-4")
    report.notes.push_back(
        "bounded-check only: perfection is approximated by the absence of odd holes and odd "
        "antiholes of length at most 11");

  for (const auto& f : report.findings) ++report.counts[f.status];
  return report;
}

// ---------------------------------------------------------------------------
// Order-32 fixture scan

namespace {

using Matrix = std::array<std::uint32_t, 3>;  // column images as bitmasks over g0, g1, g2

std::uint32_t mat_apply(const Matrix& m, std::uint32_t v) {
  std::uint32_t r = 0;
  for (int j = 0; j < 3; ++j)
    if (v >> j & 1U) r ^= m[j];
  return r;
}

bool invertible(const Matrix& m) {
  std::set<std::uint32_t> image;
  for (std::uint32_t v = 0; v < 8; ++v) image.insert(mat_apply(m, v));
  return image.size() == 8;
}

GeneratorWord word_of(std::uint32_t mask) {
  GeneratorWord w;
  for (std::uint32_t j = 0; j < 3; ++j)
    if (mask >> j & 1U) w.emplace_back(j, 1);
  return w;
}

}  // namespace

GapScanResult find_gap3249_action(const std::string& action_id) {
  std::vector<Matrix> involutions;  // A^2 = I, identity included
  for (std::uint32_t c0 = 1; c0 < 8; ++c0)
    for (std::uint32_t c1 = 1; c1 < 8; ++c1)
      for (std::uint32_t c2 = 1; c2 < 8; ++c2) {
        Matrix m{c0, c1, c2};
        if (!invertible(m)) continue;
        bool square_identity = true;
        for (std::uint32_t j = 0; j < 3; ++j)
          if (mat_apply(m, mat_apply(m, 1U << j)) != (1U << j)) square_identity = false;
        if (square_identity) involutions.push_back(m);
      }

  GapScanResult result;
  for (const Matrix& a : involutions)
    for (const Matrix& b : involutions) {
      bool commute = true;
      for (std::uint32_t j = 0; j < 3; ++j)
        if (mat_apply(a, mat_apply(b, 1U << j)) != mat_apply(b, mat_apply(a, 1U << j))) commute = false;
      if (!commute) continue;
      ++result.candidates_examined;
      ActionTable table;
      for (const Matrix* m : {&a, &b}) {
        std::vector<GeneratorWord> images;
        for (std::uint32_t j = 0; j < 3; ++j) images.push_back(word_of((*m)[j]));
        table.images.push_back(std::move(images));
      }
      ActionRegistry registry;
      registry.add(action_id, table);
      GroupSpec spec = parse_group_spec("semidirect(elem_abelian(2,3), elem_abelian(2,2), " +
                                        action_id + ")");
      RealizeOptions ro;
      ro.actions = &registry;
      auto group = realize(spec, ro);
      auto lat = SubgroupLattice::build(group);
      auto d = build_graph(lat, GraphKind::kDifference);
      if (is_bipartite(d.graph)) continue;
      auto dstar = star_reduction(d);
      if (components(dstar.graph).count <= 1) continue;
      result.action = table;
      result.spec = spec;
      return result;
    }
  throw Error(ErrorCode::kInternal,
              "no action of Z2^2 on Z2^3 gives a non-bipartite D with disconnected D*");
}

}  // namespace dsg
