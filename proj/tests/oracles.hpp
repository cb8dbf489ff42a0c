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

// Brute-force reference implementations used by the tests. They favour
// obviousness over speed and are only run on small inputs.

#ifndef DSG_TESTS_ORACLES_HPP_
#define DSG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dsg/group.hpp"
#include "dsg/simple_graph.hpp"

namespace dsg::oracle {

using Members = std::vector<ElementId>;  // sorted element ids

inline bool closed(const FiniteGroup& g, const std::vector<char>& in, const Members& set) {
  for (ElementId a : set)
    for (ElementId b : set)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

namespace detail {

inline void extend(const FiniteGroup& g, std::size_t target, std::vector<char>& in, Members& chosen,
                   std::set<Members>& out) {
  if (chosen.size() == target) {
    if (closed(g, in, chosen)) out.insert(chosen);
    return;
  }
  const ElementId start = chosen.back() + 1;
  const std::size_t n = g.order();
  for (ElementId x = start; x + (target - chosen.size()) <= n; ++x) {
    in[x] = 1;
    chosen.push_back(x);
    // Elements are chosen in increasing order, so a forced element below x
    // that is missing can never be added later.
    bool ok = !(g.inverse(x) < x && !in[g.inverse(x)]);
    for (std::size_t i = 0; ok && i < chosen.size(); ++i) {
      ElementId p = g.mul(chosen[i], x), q = g.mul(x, chosen[i]);
      if ((p < x && !in[p]) || (q < x && !in[q])) ok = false;
    }
    if (ok) extend(g, target, in, chosen, out);
    chosen.pop_back();
    in[x] = 0;
  }
}

}  // namespace detail

// Every subgroup, found by testing closure of subsets whose size divides |G|.
inline std::set<Members> subgroups(const FiniteGroup& g) {
  std::set<Members> out;
  const std::size_t n = g.order();
  for (std::size_t k = 1; k <= n; ++k) {
    if (n % k) continue;
    std::vector<char> in(n, 0);
    in[0] = 1;
    Members chosen{0};
    detail::extend(g, k, in, chosen, out);
  }
  return out;
}

// Closure of a set under multiplication, by repeated products.
inline Members generated(const FiniteGroup& g, const Members& seed) {
  std::vector<char> in(g.order(), 0);
  Members set{0};
  in[0] = 1;
  for (ElementId x : seed)
    if (!in[x]) in[x] = 1, set.push_back(x);
  for (bool grew = true; grew;) {
    grew = false;
    const Members snapshot = set;
    for (ElementId a : snapshot)
      for (ElementId b : snapshot)
        if (ElementId c = g.mul(a, b); !in[c]) in[c] = 1, set.push_back(c), grew = true;
  }
  std::sort(set.begin(), set.end());
  return set;
}

inline std::size_t product_size(const FiniteGroup& g, const Members& h, const Members& k) {
  std::set<ElementId> prod;
  for (ElementId a : h)
    for (ElementId b : k) prod.insert(g.mul(a, b));
  return prod.size();
}

inline bool normal(const FiniteGroup& g, const Members& h) {
  std::vector<char> in(g.order(), 0);
  for (ElementId x : h) in[x] = 1;
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId y : h)
      if (!in[g.conjugate(x, y)]) return false;
  return true;
}

inline Members intersect(const Members& a, const Members& b) {
  Members out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// True when some four vertices induce a path a-b-c-d.
inline bool has_induced_p4(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || !g.adjacent(b, c) || g.adjacent(a, c)) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || !g.adjacent(c, d)) continue;
          if (!g.adjacent(a, d) && !g.adjacent(b, d)) return true;
        }
      }
    }
  return false;
}

inline bool has_claw(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x = 0; x < n; ++x) {
      if (!g.adjacent(c, x)) continue;
      for (std::size_t y = x + 1; y < n; ++y) {
        if (!g.adjacent(c, y) || g.adjacent(x, y)) continue;
        for (std::size_t z = y + 1; z < n; ++z)
          if (g.adjacent(c, z) && !g.adjacent(x, z) && !g.adjacent(y, z)) return true;
      }
    }
  return false;
}

// Shortest cycle: for each edge uv, the shortest u-v path avoiding that edge.
inline std::optional<std::size_t> girth(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<std::size_t> best;
  for (auto [u, v] : g.edges()) {
    std::vector<long> dist(n, -1);
    std::deque<std::size_t> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < n; ++y) {
        if (!g.adjacent(x, y) || dist[y] >= 0) continue;
        if ((x == u && y == v) || (x == v && y == u)) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[v] > 0) {
      std::size_t len = static_cast<std::size_t>(dist[v]) + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

// Largest independent set by exhaustive include/exclude search.
inline std::size_t independence_number(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (chosen.size() + (n - v) <= best) return;
    if (v == n) {
      best = chosen.size();
      return;
    }
    bool free = std::none_of(chosen.begin(), chosen.end(),
                             [&](std::size_t u) { return g.adjacent(u, v); });
    if (free) {
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
    self(self, v + 1);
  };
  rec(rec, 0);
  return best;
}

inline std::size_t clique_number(const SimpleGraph& g) {
  return independence_number(g.complement());
}

inline SimpleGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<std::uint32_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace dsg::oracle

#endif  // DSG_TESTS_ORACLES_HPP_
