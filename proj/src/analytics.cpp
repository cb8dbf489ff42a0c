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

#include "dsg/analytics.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

#include "dsg/error.hpp"

namespace dsg {

Components components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  Components c;
  c.label.assign(n, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t s = 0; s < n; ++s) {
    if (c.label[s] != std::numeric_limits<std::uint32_t>::max()) continue;
    auto id = static_cast<std::uint32_t>(c.count++);
    std::vector<std::size_t> stack{s};
    c.label[s] = id;
    std::size_t size = 0;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      ++size;
      g.neighbors(v).for_each([&](std::size_t w) {
        if (c.label[w] == std::numeric_limits<std::uint32_t>::max()) {
          c.label[w] = id;
          stack.push_back(w);
        }
      });
    }
    c.sizes.push_back(size);
  }
  return c;
}

std::optional<std::size_t> girth(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    bool triangle = false;
    g.neighbors(u).for_each([&](std::size_t v) {
      if (!triangle && u < v && g.neighbors(u).intersects(g.neighbors(v))) triangle = true;
    });
    if (triangle) return 3;
  }
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t best = kNone;
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kNone);
    dist[s] = 0;
    parent[s] = kNone;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (std::uint32_t w : adj[u]) {
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kNone) return std::nullopt;
  return best;
}

bool is_bipartite(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      bool ok = true;
      g.neighbors(v).for_each([&](std::size_t w) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

namespace {

// Bitset branch and bound in the style of Tomita's MCQ/San Segundo's BBMC.
class CliqueSearch {
 public:
  CliqueSearch(const SimpleGraph& g, std::uint64_t budget) : budget_(budget) {
    const std::size_t n = g.vertex_count();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0U);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
      return g.degree(a) > g.degree(b);
    });
    adj_.assign(n, Bitset(n));
    std::vector<std::uint32_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order_[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n; ++i)
      g.neighbors(order_[i]).for_each([&](std::size_t w) { adj_[i].set(position[w]); });
  }

  CliqueResult run() {
    const std::size_t n = adj_.size();
    Bitset candidates(n);
    candidates.set_all();
    // Greedy seed, so an exhausted budget still reports a real clique.
    for (Bitset seed = candidates; seed.any(); seed &= adj_[best_.back()])
      best_.push_back(static_cast<std::uint32_t>(seed.find_first()));
    std::vector<std::uint32_t> current;
    if (n > 0) expand(current, candidates);
    CliqueResult r;
    r.size = best_.size();
    for (auto v : best_) r.witness.push_back(order_[v]);
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = nodes_;
    return r;
  }

 private:
  void expand(std::vector<std::uint32_t>& current, Bitset candidates) {
    if (++nodes_ > budget_)
      throw BudgetExhausted("clique search exceeded its node budget of " +
                                std::to_string(budget_),
                            best_.size());
    std::vector<std::uint32_t> vertices, colors;
    Bitset uncolored = candidates;
    std::uint32_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
        uncolored.reset(v);
        q.reset(v);
        q.and_not(adj_[v]);
        vertices.push_back(static_cast<std::uint32_t>(v));
        colors.push_back(color);
      }
    }
    for (std::size_t i = vertices.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best_.size()) return;
      std::uint32_t v = vertices[i];
      current.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> order_;
  std::vector<Bitset> adj_;
  std::vector<std::uint32_t> best_;
};

}  // namespace

CliqueResult max_clique(const SimpleGraph& g, std::uint64_t budget) {
  return CliqueSearch(g, budget).run();
}

CliqueResult max_independent_set(const SimpleGraph& g, std::uint64_t budget) {
  Components comps = components(g);
  std::vector<std::vector<std::uint32_t>> members(comps.count);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) members[comps.label[v]].push_back(v);

  CliqueResult total;
  for (std::size_t c = 0; c < comps.count; ++c) {
    const auto& vs = members[c];
    if (vs.size() == 1) {
      total.size += 1;
      total.witness.push_back(vs[0]);
      continue;
    }
    CliqueResult part;
    try {
      part = max_clique(g.induced(vs).complement(), budget - std::min(budget, total.nodes));
    } catch (const BudgetExhausted& e) {
      std::size_t bound = total.size + e.lower_bound() + (comps.count - c - 1);
      throw BudgetExhausted(e.what(), bound);
    }
    total.size += part.size;
    total.nodes += part.nodes;
    for (auto v : part.witness) total.witness.push_back(vs[v]);
  }
  std::sort(total.witness.begin(), total.witness.end());
  return total;
}

std::optional<std::array<std::uint32_t, 4>> find_claw(const SimpleGraph& g) {
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const Bitset& nv = g.neighbors(v);
    if (nv.count() < 3) continue;
    for (std::size_t a = nv.find_first(); a != Bitset::npos; a = nv.find_next(a)) {
      for (std::size_t b = nv.find_next(a); b != Bitset::npos; b = nv.find_next(b)) {
        if (g.adjacent(a, b)) continue;
        Bitset rest = nv;
        rest.and_not(g.neighbors(a));
        rest.and_not(g.neighbors(b));
        std::size_t c = rest.find_next(b);
        if (c != Bitset::npos)
          return std::array<std::uint32_t, 4>{v, static_cast<std::uint32_t>(a),
                                              static_cast<std::uint32_t>(b),
                                              static_cast<std::uint32_t>(c)};
      }
    }
  }
  return std::nullopt;
}

bool is_clawfree(const SimpleGraph& g) { return !find_claw(g); }

namespace {

// Components of the subgraph induced on `within`, or of its complement.
std::vector<Bitset> split(const SimpleGraph& g, const Bitset& within, bool complement) {
  std::vector<Bitset> parts;
  Bitset left = within;
  while (left.any()) {
    Bitset part(within.size());
    std::size_t s = left.find_first();
    part.set(s);
    left.reset(s);
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      Bitset next = left;
      if (complement)
        next.and_not(g.neighbors(v));
      else
        next &= g.neighbors(v);
      next.for_each([&](std::size_t w) {
        left.reset(w);
        part.set(w);
        stack.push_back(w);
      });
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace

bool is_cograph(const SimpleGraph& g) {
  Bitset all(g.vertex_count());
  all.set_all();
  std::vector<Bitset> work{all};
  while (!work.empty()) {
    Bitset s = std::move(work.back());
    work.pop_back();
    if (s.count() < 2) continue;
    auto parts = split(g, s, false);
    if (parts.size() == 1) parts = split(g, s, true);
    if (parts.size() == 1) return false;
    for (auto& p : parts) work.push_back(std::move(p));
  }
  return true;
}

std::vector<std::uint32_t> universal_vertices(const SimpleGraph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) + 1 == g.vertex_count()) out.push_back(v);
  return out;
}

std::optional<std::size_t> cycle_length(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  if (components(g).count != 1) return std::nullopt;
  return n;
}

std::size_t triangle_count(const SimpleGraph& g) {
  std::size_t total = 0;
  for (auto [u, v] : g.edges()) total += g.neighbors(u).intersection_count(g.neighbors(v));
  return total / 3;
}

std::optional<std::array<std::uint32_t, 4>> find_induced_c4(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      Bitset common = g.neighbors(u) & g.neighbors(w);
      for (std::size_t a = common.find_first(); a != Bitset::npos; a = common.find_next(a)) {
        Bitset others = common;
        others.and_not(g.neighbors(a));
        others.reset(a);
        std::size_t b = others.find_first();
        if (b != Bitset::npos)
          return std::array<std::uint32_t, 4>{
              static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(a),
              static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(b)};
      }
    }
  }
  return std::nullopt;
}

// ---- Isomorphism ------------------------------------------------------------

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SimpleGraph& g1, const SimpleGraph& g2, std::uint64_t budget)
      : g1_(g1), g2_(g2), budget_(budget) {}

  bool run(std::vector<std::uint32_t>* mapping) {
    const std::size_t n = g1_.vertex_count();
    std::vector<std::uint32_t> c1(n, 0), c2(n, 0);
    std::size_t classes = 1;
    if (!refine(c1, c2, classes)) return false;
    return search(std::move(c1), std::move(c2), classes, mapping);
  }

 private:
  // Joint colour refinement; false when the two colourings become
  // incompatible.
  bool refine(std::vector<std::uint32_t>& c1, std::vector<std::uint32_t>& c2,
              std::size_t& classes) const {
    const std::size_t n = c1.size();
    while (true) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> palette;
      std::vector<std::vector<std::uint32_t>> s1(n), s2(n);
      auto signature = [](const SimpleGraph& g, const std::vector<std::uint32_t>& c,
                          std::size_t v) {
        std::vector<std::uint32_t> sig{c[v]};
        g.neighbors(v).for_each([&](std::size_t w) { sig.push_back(c[w]); });
        std::sort(sig.begin() + 1, sig.end());
        return sig;
      };
      for (std::size_t v = 0; v < n; ++v) {
        s1[v] = signature(g1_, c1, v);
        s2[v] = signature(g2_, c2, v);
        palette.emplace(s1[v], 0);
        palette.emplace(s2[v], 0);
      }
      std::uint32_t next = 0;
      for (auto& [sig, colour] : palette) colour = next++;
      std::vector<std::size_t> count1(next, 0), count2(next, 0);
      for (std::size_t v = 0; v < n; ++v) {
        c1[v] = palette[s1[v]];
        c2[v] = palette[s2[v]];
        ++count1[c1[v]];
        ++count2[c2[v]];
      }
      if (count1 != count2) return false;
      if (next == classes) return true;
      classes = next;
    }
  }

  bool search(std::vector<std::uint32_t> c1, std::vector<std::uint32_t> c2, std::size_t classes,
              std::vector<std::uint32_t>* mapping) {
    const std::size_t n = c1.size();
    if (++nodes_ > budget_)
      throw BudgetExhausted("isomorphism search exceeded its node budget of " +
                                std::to_string(budget_),
                            0);
    if (classes == n) {
      std::vector<std::uint32_t> to2(n), map(n);
      for (std::size_t w = 0; w < n; ++w) to2[c2[w]] = static_cast<std::uint32_t>(w);
      for (std::size_t v = 0; v < n; ++v) map[v] = to2[c1[v]];
      for (auto [u, v] : g1_.edges())
        if (!g2_.adjacent(map[u], map[v])) return false;
      if (mapping) *mapping = std::move(map);
      return true;
    }
    std::vector<std::size_t> size(classes, 0);
    for (auto c : c1) ++size[c];
    std::uint32_t target = 0;
    std::size_t best = n + 1;
    for (std::uint32_t c = 0; c < classes; ++c)
      if (size[c] > 1 && size[c] < best) {
        best = size[c];
        target = c;
      }
    std::size_t v = std::find(c1.begin(), c1.end(), target) - c1.begin();
    for (std::size_t w = 0; w < n; ++w) {
      if (c2[w] != target) continue;
      auto d1 = c1, d2 = c2;
      d1[v] = d2[w] = static_cast<std::uint32_t>(classes);
      std::size_t k = classes + 1;
      if (!refine(d1, d2, k)) continue;
      if (search(std::move(d1), std::move(d2), k, mapping)) return true;
    }
    return false;
  }

  const SimpleGraph& g1_;
  const SimpleGraph& g2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::size_t> sorted_degrees(const SimpleGraph& g) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace

bool graphs_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2, std::uint64_t budget,
                       std::vector<std::uint32_t>* mapping) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  if (sorted_degrees(g1) != sorted_degrees(g2)) return false;
  auto sizes1 = components(g1).sizes, sizes2 = components(g2).sizes;
  std::sort(sizes1.begin(), sizes1.end());
  std::sort(sizes2.begin(), sizes2.end());
  if (sizes1 != sizes2) return false;
  if (triangle_count(g1) != triangle_count(g2)) return false;
  if (g1.vertex_count() == 0) {
    if (mapping) mapping->clear();
    return true;
  }
  return IsomorphismSearch(g1, g2, budget).run(mapping);
}

// ---- Odd holes ------------------------------------------------------------------

namespace {

class HoleSearch {
 public:
  HoleSearch(const SimpleGraph& g, std::size_t max_length, std::uint64_t& nodes,
             std::uint64_t budget)
      : g_(g), max_length_(max_length), nodes_(nodes), budget_(budget) {}

  // Returns an induced odd cycle of length 5..max_length, if any; sets
  // exhausted when the budget ran out first.
  std::optional<std::vector<std::uint32_t>> find(bool& exhausted) {
    const std::size_t n = g_.vertex_count();
    for (std::size_t s = 0; s < n && !exhausted_; ++s) {
      Bitset blocked(n);
      for (std::size_t v = 0; v <= s; ++v) blocked.set(v);
      path_ = {static_cast<std::uint32_t>(s)};
      g_.neighbors(s).for_each([&](std::size_t p1) {
        if (found_ || exhausted_ || p1 < s) return;
        path_.push_back(static_cast<std::uint32_t>(p1));
        Bitset b = blocked;
        b.set(p1);
        extend(b);
        if (!found_) path_.pop_back();
      });
      if (found_) break;
    }
    exhausted = exhausted_;
    if (found_) return path_;
    return std::nullopt;
  }

 private:
  void extend(const Bitset& blocked) {
    if (found_ || exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    const std::uint32_t s = path_.front();
    const std::uint32_t last = path_.back();
    const std::size_t k = path_.size();  // vertices on the path so far
    Bitset candidates = g_.neighbors(last);
    candidates.and_not(blocked);
    // Neighbours of s can only close the cycle, which needs odd length >= 5.
    if (k + 1 < 5 || (k + 1) % 2 == 0) candidates.and_not(g_.neighbors(s));
    // Interior vertices may not touch the new one, except its predecessor.
    Bitset next_blocked = blocked;
    next_blocked |= g_.neighbors(last);
    for (std::size_t x = candidates.find_first(); x != Bitset::npos;
         x = candidates.find_next(x)) {
      if (g_.adjacent(x, s)) {
        std::size_t length = k + 1;
        if (length >= 5 && length % 2 == 1) {
          path_.push_back(static_cast<std::uint32_t>(x));
          found_ = true;
          return;
        }
        continue;
      }
      if (k + 1 >= max_length_) continue;
      path_.push_back(static_cast<std::uint32_t>(x));
      Bitset b = next_blocked;
      b.set(x);
      extend(b);
      if (found_ || exhausted_) return;
      path_.pop_back();
    }
  }

  const SimpleGraph& g_;
  std::size_t max_length_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<std::uint32_t> path_;
  bool found_ = false;
  bool exhausted_ = false;
};

}  // namespace

OddHoleScan scan_odd_holes(const SimpleGraph& g, std::size_t max_length, std::uint64_t budget) {
  OddHoleScan scan;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  const SimpleGraph complement = g.complement();
  // Iterative deepening finds short holes before the deep searches run.
  for (std::size_t len = 5; len <= max_length && !exhausted; len += 2) {
    scan.hole = HoleSearch(g, len, nodes, budget).find(exhausted);
    if (scan.hole || exhausted) break;
    scan.antihole = HoleSearch(complement, len, nodes, budget).find(exhausted);
    if (scan.antihole) break;
  }
  scan.complete = !exhausted;
  return scan;
}

AnalysisReport analyze(const SimpleGraph& g, const AnalysisBudgets& budgets) {
  AnalysisReport r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  for (std::size_t v = 0; v < r.vertex_count; ++v) {
    r.degree_sequence.push_back(g.degree(v));
    if (g.degree(v) == 0) ++r.isolated_count;
  }
  std::sort(r.degree_sequence.rbegin(), r.degree_sequence.rend());
  r.component_count = components(g).count;
  r.girth = girth(g);
  r.bipartite = is_bipartite(g);
  try {
    r.clique_number = max_clique(g, budgets.clique).size;
    r.clique_lower_bound = *r.clique_number;
  } catch (const BudgetExhausted& e) {
    r.clique_lower_bound = e.lower_bound();
  }
  try {
    r.independence_number = max_independent_set(g, budgets.independence).size;
    r.independence_lower_bound = *r.independence_number;
  } catch (const BudgetExhausted& e) {
    r.independence_lower_bound = e.lower_bound();
  }
  r.clawfree = is_clawfree(g);
  r.cograph = is_cograph(g);
  r.universal_vertices = universal_vertices(g);
  r.cycle_length = cycle_length(g);
  return r;
}

}  // namespace dsg
