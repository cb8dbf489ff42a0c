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

#include "dsg/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "dsg/error.hpp"

namespace dsg {

namespace {

// Closure of H together with x, built coset by coset (Dimino). Returns the
// whole group early once more than half of it is reached.
Bitset extend(const FiniteGroup& g, const Bitset& h_members, const std::vector<ElementId>& h_list,
              const std::vector<ElementId>& gens, Bitset& scratch) {
  const std::size_t order = g.order();
  scratch = h_members;
  std::size_t count = h_list.size();
  std::vector<ElementId> reps{FiniteGroup::identity()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (ElementId s : gens) {
      ElementId y = g.mul(s, reps[i]);
      if (scratch.test(y)) continue;
      for (ElementId h : h_list) scratch.set(g.mul(y, h));
      count += h_list.size();
      if (2 * count > order) {
        scratch.set_all();
        return scratch;
      }
      reps.push_back(y);
    }
  }
  return scratch;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, std::size_t subgroup_cap) {
  const std::size_t order = g.order();
  std::vector<Subgroup> found;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
  auto insert = [&](Bitset members, std::vector<ElementId> gens) {
    if (seen.contains(members)) return;
    if (found.size() >= subgroup_cap)
      throw Error(ErrorCode::kSubgroupCap, g.label() + " has more than " +
                                               std::to_string(subgroup_cap) + " subgroups");
    seen.emplace(members, found.size());
    Subgroup s;
    s.order = members.count();
    s.members = std::move(members);
    s.generators = std::move(gens);
    found.push_back(std::move(s));
  };

  // Cyclic subgroups; prime-power ones drive the extension step since every
  // subgroup is generated by its elements of prime-power order.
  std::vector<ElementId> extenders;
  for (ElementId e = 0; e < order; ++e) {
    Bitset c = g.cyclic_closure(e);
    bool fresh = !seen.contains(c);
    insert(std::move(c), e == FiniteGroup::identity() ? std::vector<ElementId>{}
                                                      : std::vector<ElementId>{e});
    if (fresh && e != FiniteGroup::identity() && prime_power(g.element_order(e)))
      extenders.push_back(e);
  }

  Bitset scratch(order);
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].order == order) continue;
    const Bitset members = found[i].members;
    const std::vector<ElementId> base_gens = found[i].generators;
    std::vector<ElementId> h_list;
    members.for_each([&](std::size_t e) { h_list.push_back(static_cast<ElementId>(e)); });
    for (ElementId x : extenders) {
      if (members.test(x)) continue;
      std::vector<ElementId> gens = base_gens;
      gens.push_back(x);
      Bitset k = extend(g, members, h_list, gens, scratch);
      if (!seen.contains(k)) insert(std::move(k), std::move(gens));
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return Bitset::lex_less(a.members, b.members);
  });
  return found;
}

std::shared_ptr<const SubgroupLattice> SubgroupLattice::build(
    std::shared_ptr<const FiniteGroup> group, std::size_t subgroup_cap) {
  auto subgroups = enumerate_subgroups(*group, subgroup_cap);
  return std::make_shared<const SubgroupLattice>(std::move(group), std::move(subgroups));
}

SubgroupLattice::SubgroupLattice(std::shared_ptr<const FiniteGroup> group,
                                 std::vector<Subgroup> subgroups)
    : group_(std::move(group)), subgroups_(std::move(subgroups)) {
  if (subgroups_.empty() || subgroups_.front().order != 1 ||
      subgroups_.back().order != group_->order())
    throw Error(ErrorCode::kInvalidArgument, "subgroup list must run from trivial to whole group");
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    const auto& s = subgroups_[i];
    if (s.members.size() != group_->order() || s.members.count() != s.order)
      throw Error(ErrorCode::kInvalidArgument, "subgroup " + std::to_string(i) + " is malformed");
    if (i > 0) {
      const auto& prev = subgroups_[i - 1];
      if (prev.order > s.order || (prev.order == s.order && !Bitset::lex_less(prev.members, s.members)))
        throw Error(ErrorCode::kInvalidArgument, "subgroup list is not canonically sorted");
    }
    index_.emplace(s.members, static_cast<SubgroupId>(i));
  }
  annotate();
}

void SubgroupLattice::annotate() {
  const std::size_t n = subgroups_.size();
  const FiniteGroup& g = *group_;

  subsets_.assign(n, Bitset(n));
  supersets_.assign(n, Bitset(n));
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = h; k < n; ++k) {
      if (subgroups_[k].order % subgroups_[h].order != 0) continue;
      if (k != h && subgroups_[k].order == subgroups_[h].order) continue;
      if (!subgroups_[h].members.is_subset_of(subgroups_[k].members)) continue;
      supersets_[h].set(k);
      subsets_[k].set(h);
    }
  }

  conj_by_generator_.clear();
  UnionFind classes(n);
  for (ElementId x : g.generator_ids()) {
    std::vector<SubgroupId> map(n);
    for (std::size_t h = 0; h < n; ++h) {
      map[h] = conjugate(static_cast<SubgroupId>(h), x);
      classes.unite(static_cast<std::uint32_t>(h), map[h]);
    }
    conj_by_generator_.push_back(std::move(map));
  }

  flags_.assign(n, {});
  class_members_.clear();
  std::vector<std::uint32_t> class_of_root(n, UINT32_MAX);
  for (std::size_t h = 0; h < n; ++h) {
    std::uint32_t root = classes.find(static_cast<std::uint32_t>(h));
    if (class_of_root[root] == UINT32_MAX) {
      class_of_root[root] = static_cast<std::uint32_t>(class_members_.size());
      class_members_.emplace_back();
    }
    flags_[h].conjugacy_class = class_of_root[root];
    class_members_[class_of_root[root]].push_back(static_cast<SubgroupId>(h));
  }
  for (std::size_t h = 0; h < n; ++h) {
    flags_[h].normal = conjugates(static_cast<SubgroupId>(h)).size() == 1;
    flags_[h].maximal = h + 1 < n && supersets_[h].count() == 2;
  }
}

std::optional<SubgroupId> SubgroupLattice::find(const Bitset& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::join(SubgroupId h, SubgroupId k) const {
  return static_cast<SubgroupId>(supersets_[h].first_common(supersets_[k]));
}

SubgroupId SubgroupLattice::meet(SubgroupId h, SubgroupId k) const {
  Bitset common = subsets_[h] & subsets_[k];
  return static_cast<SubgroupId>(common.find_last());
}

std::uint64_t SubgroupLattice::product_size(SubgroupId h, SubgroupId k) const {
  const auto& a = subgroups_[h];
  const auto& b = subgroups_[k];
  return a.order * b.order / a.members.intersection_count(b.members);
}

SubgroupId SubgroupLattice::conjugate(SubgroupId h, ElementId x) const {
  const FiniteGroup& g = *group_;
  Bitset image(g.order());
  subgroups_[h].members.for_each(
      [&](std::size_t e) { image.set(g.conjugate(x, static_cast<ElementId>(e))); });
  auto id = find(image);
  if (!id) throw Error(ErrorCode::kInternal, "conjugate of a subgroup is missing from the lattice");
  return *id;
}

SubgroupId SubgroupLattice::normalizer(SubgroupId h) const {
  const FiniteGroup& g = *group_;
  const auto& sub = subgroups_[h];
  Bitset members(g.order());
  for (ElementId x = 0; x < g.order(); ++x) {
    bool fixes = std::all_of(sub.generators.begin(), sub.generators.end(),
                             [&](ElementId s) { return sub.members.test(g.conjugate(x, s)); });
    if (fixes) members.set(x);
  }
  auto id = find(members);
  if (!id) throw Error(ErrorCode::kInternal, "normalizer is missing from the lattice");
  return *id;
}

std::vector<SubgroupId> SubgroupLattice::maximal_subgroups() const {
  std::vector<SubgroupId> out;
  for (SubgroupId h = 0; h < size(); ++h)
    if (flags_[h].maximal) out.push_back(h);
  return out;
}

std::vector<SubgroupId> SubgroupLattice::normal_subgroups() const {
  std::vector<SubgroupId> out;
  for (SubgroupId h = 0; h < size(); ++h)
    if (flags_[h].normal) out.push_back(h);
  return out;
}

std::vector<std::uint32_t> SubgroupLattice::primes() const {
  std::vector<std::uint32_t> out;
  std::uint64_t n = group_->order();
  for (std::uint32_t p = 2; n > 1; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

std::vector<SubgroupId> SubgroupLattice::sylow_subgroups(std::uint32_t p) const {
  const std::uint64_t n = group_->order();
  if (p < 2 || n % p != 0)
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(p) + " does not divide the group order " + std::to_string(n));
  std::uint64_t part = 1;
  while (n % (part * p) == 0) part *= p;
  std::vector<SubgroupId> out;
  for (SubgroupId h = 0; h < size(); ++h)
    if (subgroups_[h].order == part) out.push_back(h);
  return out;
}

SubgroupId SubgroupLattice::frattini() const {
  Bitset common(size());
  common.set_all();
  for (SubgroupId m : maximal_subgroups()) common &= subsets_[m];
  // With no maximal subgroups (trivial group) everything is common.
  return static_cast<SubgroupId>(common.find_last());
}

}  // namespace dsg
