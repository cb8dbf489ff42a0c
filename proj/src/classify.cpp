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

#include "dsg/classify.hpp"

#include "dsg/error.hpp"

namespace dsg {

namespace {

std::optional<std::pair<ElementId, ElementId>> find_noncommuting(const FiniteGroup& g) {
  const auto& gens = g.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i]))
        return std::make_pair(gens[i], gens[j]);
  return std::nullopt;
}

std::optional<SubgroupId> find_non_normal(const SubgroupLattice& lat) {
  for (SubgroupId h = 0; h < lat.size(); ++h)
    if (!lat.is_normal(h)) return h;
  return std::nullopt;
}

std::optional<std::pair<SubgroupId, SubgroupId>> find_non_permuting(const SubgroupLattice& lat) {
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    if (lat.is_normal(h)) continue;
    for (SubgroupId k = h + 1; k < lat.size(); ++k) {
      if (lat.is_normal(k)) continue;
      if (lat.order(lat.join(h, k)) != lat.product_size(h, k)) return std::make_pair(h, k);
    }
  }
  return std::nullopt;
}

std::optional<SubgroupId> find_non_normal_sylow(const SubgroupLattice& lat) {
  for (std::uint32_t p : lat.primes()) {
    auto sylows = lat.sylow_subgroups(p);
    if (sylows.size() != 1) return sylows.front();
  }
  return std::nullopt;
}

std::optional<SubgroupId> find_non_normal_maximal(const SubgroupLattice& lat) {
  for (SubgroupId m : lat.maximal_subgroups())
    if (!lat.is_normal(m)) return m;
  return std::nullopt;
}

std::optional<SubgroupId> find_non_prime_index_maximal(const SubgroupLattice& lat) {
  for (SubgroupId m : lat.maximal_subgroups())
    if (!is_prime(lat.group().order() / lat.order(m))) return m;
  return std::nullopt;
}

std::optional<SubgroupId> find_proper_normal(const SubgroupLattice& lat) {
  for (SubgroupId h = 1; h < lat.whole(); ++h)
    if (lat.is_normal(h)) return h;
  return std::nullopt;
}

// Whether N/M is cyclic, for M <= N: some x in N has coset order [N:M].
bool cyclic_factor(const FiniteGroup& g, const Subgroup& n, const Subgroup& m) {
  const std::uint64_t index = n.order / m.order;
  if (index == 1) return true;
  bool cyclic = false;
  n.members.for_each([&](std::size_t e) {
    if (cyclic || m.members.test(e)) return;
    ElementId x = static_cast<ElementId>(e);
    ElementId power = x;
    std::uint64_t k = 1;
    while (!m.members.test(power)) {
      power = g.mul(power, x);
      ++k;
    }
    cyclic = k == index;
  });
  return cyclic;
}

}  // namespace

bool is_abelian(const FiniteGroup& g) { return !find_noncommuting(g); }

bool is_p_group(const FiniteGroup& g, std::uint32_t* p) {
  auto pk = prime_power(g.order());
  if (pk && p) *p = pk->first;
  return pk.has_value();
}

bool is_dedekind(const SubgroupLattice& lat) { return !find_non_normal(lat); }

bool is_iwasawa(const SubgroupLattice& lat) { return !find_non_permuting(lat); }

bool is_nilpotent(const SubgroupLattice& lat) {
  bool sylow = !find_non_normal_sylow(lat);
  bool maximal = !find_non_normal_maximal(lat);
  if (sylow != maximal)
    throw Error(ErrorCode::kInternal,
                "nilpotency criteria disagree for " + lat.group().label());
  return sylow;
}

Bitset derived_subgroup(const FiniteGroup& g, const Bitset& members) {
  std::vector<ElementId> list;
  members.for_each([&](std::size_t e) { list.push_back(static_cast<ElementId>(e)); });
  Bitset commutators(g.order());
  for (ElementId x : list)
    for (ElementId y : list)
      commutators.set(g.mul(g.mul(x, y), g.inverse(g.mul(y, x))));
  std::vector<ElementId> gens;
  commutators.for_each([&](std::size_t e) { gens.push_back(static_cast<ElementId>(e)); });
  return g.closure(gens);
}

bool is_solvable(const FiniteGroup& g, std::uint32_t* derived_length) {
  Bitset current(g.order());
  current.set_all();
  std::uint32_t length = 0;
  while (current.count() > 1) {
    Bitset next = derived_subgroup(g, current);
    if (next == current) return false;
    current = std::move(next);
    ++length;
  }
  if (derived_length) *derived_length = length;
  return true;
}

bool has_cyclic_normal_series(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  auto normals = lat.normal_subgroups();
  std::vector<bool> reachable(lat.size(), false);
  reachable[lat.trivial()] = true;
  for (SubgroupId n : normals) {
    if (n == lat.trivial()) continue;
    for (SubgroupId m : normals) {
      if (lat.order(m) >= lat.order(n)) break;
      if (!reachable[m] || !lat.contains(n, m)) continue;
      if (cyclic_factor(g, lat.subgroup(n), lat.subgroup(m))) {
        reachable[n] = true;
        break;
      }
    }
  }
  return reachable[lat.whole()];
}

bool is_supersolvable(const SubgroupLattice& lat) {
  bool huppert = !find_non_prime_index_maximal(lat);
  bool series = has_cyclic_normal_series(lat);
  if (huppert != series)
    throw Error(ErrorCode::kInternal,
                "supersolvability criteria disagree for " + lat.group().label());
  return huppert;
}

bool is_simple(const SubgroupLattice& lat) {
  return lat.group().order() > 1 && !find_proper_normal(lat);
}

GroupClassification classify(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  GroupClassification c;
  c.noncommuting_generators = find_noncommuting(g);
  c.abelian = !c.noncommuting_generators;
  c.p_group = is_p_group(g, &c.p);
  c.non_normal_subgroup = find_non_normal(lat);
  c.dedekind = !c.non_normal_subgroup;
  c.non_permuting_pair = find_non_permuting(lat);
  c.iwasawa = !c.non_permuting_pair;
  c.nilpotent = is_nilpotent(lat);
  c.non_normal_sylow = find_non_normal_sylow(lat);
  c.solvable = is_solvable(g, &c.derived_length);
  c.supersolvable = is_supersolvable(lat);
  c.non_prime_index_maximal = find_non_prime_index_maximal(lat);
  c.proper_normal_subgroup = find_proper_normal(lat);
  c.simple = is_simple(lat);

  auto require = [&](bool ok, const char* what) {
    if (!ok)
      throw Error(ErrorCode::kInternal,
                  std::string("classification implication fails (") + what + ") for " + g.label());
  };
  require(!c.abelian || c.dedekind, "abelian => dedekind");
  require(!c.dedekind || c.iwasawa, "dedekind => iwasawa");
  require(!c.abelian || c.nilpotent, "abelian => nilpotent");
  require(!c.nilpotent || c.supersolvable, "nilpotent => supersolvable");
  require(!c.supersolvable || c.solvable, "supersolvable => solvable");
  require(!c.p_group || c.nilpotent, "p-group => nilpotent");
  return c;
}

}  // namespace dsg
