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

#ifndef DSG_CLASSIFY_HPP_
#define DSG_CLASSIFY_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dsg/group.hpp"
#include "dsg/lattice.hpp"

namespace dsg {

struct GroupClassification {
  bool abelian = false;
  bool p_group = false;
  std::uint32_t p = 0;  // set when p_group
  bool dedekind = false;
  bool iwasawa = false;
  bool nilpotent = false;
  bool solvable = false;
  bool supersolvable = false;
  bool simple = false;

  // Witnesses for negative answers, when applicable.
  std::optional<std::pair<ElementId, ElementId>> noncommuting_generators;
  std::optional<SubgroupId> non_normal_subgroup;
  std::optional<std::pair<SubgroupId, SubgroupId>> non_permuting_pair;
  std::optional<SubgroupId> non_normal_sylow;
  std::optional<SubgroupId> non_prime_index_maximal;
  std::optional<SubgroupId> proper_normal_subgroup;
  // Length of the derived series when solvable.
  std::uint32_t derived_length = 0;
};

// True iff every pair of generators commutes.
bool is_abelian(const FiniteGroup& g);
bool is_p_group(const FiniteGroup& g, std::uint32_t* p = nullptr);
bool is_dedekind(const SubgroupLattice& lat);
// HK = KH as sets for every pair, tested as |<H,K>| = |HK|.
bool is_iwasawa(const SubgroupLattice& lat);
// Sylow criterion, cross-checked against normality of all maximal subgroups.
bool is_nilpotent(const SubgroupLattice& lat);
bool is_solvable(const FiniteGroup& g, std::uint32_t* derived_length = nullptr);
// Prime index of every maximal subgroup, cross-checked against the existence
// of a normal series with cyclic factors.
bool is_supersolvable(const SubgroupLattice& lat);
bool is_simple(const SubgroupLattice& lat);

// Derived subgroup as the closure of all commutators, as a member set.
Bitset derived_subgroup(const FiniteGroup& g, const Bitset& members);

// Whether some normal series 1 = N0 < ... < Nk = G has cyclic factors.
bool has_cyclic_normal_series(const SubgroupLattice& lat);

// All flags with witnesses; throws kInternal if the implication chain
// between the flags fails.
GroupClassification classify(const SubgroupLattice& lat);

}  // namespace dsg

#endif  // DSG_CLASSIFY_HPP_
