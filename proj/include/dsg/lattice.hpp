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

#ifndef DSG_LATTICE_HPP_
#define DSG_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dsg/bitset.hpp"
#include "dsg/group.hpp"

namespace dsg {

using SubgroupId = std::uint32_t;

inline constexpr std::size_t kDefaultSubgroupCap = 100'000;

struct Subgroup {
  Bitset members;                     // over the parent's element ids
  std::uint64_t order = 0;
  std::vector<ElementId> generators;  // small generating list, for reports

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

// Per-subgroup annotation bits; also what the lattice cache stores.
struct SubgroupFlags {
  bool normal = false;
  bool maximal = false;
  std::uint32_t conjugacy_class = 0;

  friend bool operator==(const SubgroupFlags&, const SubgroupFlags&) = default;
};

// Every subgroup of one group, sorted by (order, member set lexicographic):
// id 0 is the trivial subgroup and id size()-1 is the whole group.
class SubgroupLattice {
 public:
  // Cyclic-extension enumeration followed by annotation.
  static std::shared_ptr<const SubgroupLattice> build(
      std::shared_ptr<const FiniteGroup> group, std::size_t subgroup_cap = kDefaultSubgroupCap);

  // Annotates an externally supplied subgroup list (for example one read
  // from the cache). The list must be complete and canonically sorted.
  SubgroupLattice(std::shared_ptr<const FiniteGroup> group, std::vector<Subgroup> subgroups);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& subgroup(SubgroupId h) const { return subgroups_[h]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return static_cast<SubgroupId>(subgroups_.size() - 1); }
  std::uint64_t order(SubgroupId h) const { return subgroups_[h].order; }

  std::optional<SubgroupId> find(const Bitset& members) const;

  // Ids of subgroups containing h (including h), and contained in h.
  const Bitset& supersets(SubgroupId h) const { return supersets_[h]; }
  const Bitset& subsets(SubgroupId h) const { return subsets_[h]; }
  bool contains(SubgroupId outer, SubgroupId inner) const { return subsets_[outer].test(inner); }

  SubgroupId join(SubgroupId h, SubgroupId k) const;
  SubgroupId meet(SubgroupId h, SubgroupId k) const;
  // |H||K| / |H n K|, the size of the set HK.
  std::uint64_t product_size(SubgroupId h, SubgroupId k) const;
  SubgroupId normalizer(SubgroupId h) const;
  // g H g^-1.
  SubgroupId conjugate(SubgroupId h, ElementId g) const;
  // Conjugation by the i-th generator of the group, as a map on ids.
  const std::vector<SubgroupId>& generator_conjugation(std::size_t i) const {
    return conj_by_generator_[i];
  }

  const SubgroupFlags& flags(SubgroupId h) const { return flags_[h]; }
  bool is_normal(SubgroupId h) const { return flags_[h].normal; }
  bool is_maximal(SubgroupId h) const { return flags_[h].maximal; }
  std::uint32_t conjugacy_class(SubgroupId h) const { return flags_[h].conjugacy_class; }
  std::size_t conjugacy_class_count() const { return class_members_.size(); }
  // Sorted ids of the conjugacy class of h.
  const std::vector<SubgroupId>& conjugates(SubgroupId h) const {
    return class_members_[flags_[h].conjugacy_class];
  }

  std::vector<SubgroupId> maximal_subgroups() const;
  std::vector<SubgroupId> normal_subgroups() const;
  // Prime divisors of |G| in increasing order.
  std::vector<std::uint32_t> primes() const;
  // Throws kInvalidArgument when p does not divide |G|.
  std::vector<SubgroupId> sylow_subgroups(std::uint32_t p) const;
  SubgroupId frattini() const;

 private:
  void annotate();

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<Bitset, SubgroupId, BitsetHash> index_;
  std::vector<Bitset> supersets_, subsets_;
  std::vector<std::vector<SubgroupId>> conj_by_generator_;
  std::vector<SubgroupFlags> flags_;
  std::vector<std::vector<SubgroupId>> class_members_;
};

// Raw enumeration only, canonically sorted; exposed for tests and the cache.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& group,
                                          std::size_t subgroup_cap = kDefaultSubgroupCap);

}  // namespace dsg

#endif  // DSG_LATTICE_HPP_
