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

#ifndef DSG_GROUP_SPEC_HPP_
#define DSG_GROUP_SPEC_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsg/permutation.hpp"

namespace dsg {

enum class Constructor {
  kCyclic,
  kDihedral,
  kDicyclic,
  kSymmetric,
  kAlternating,
  kElemAbelian,
  kDirect,
  kSemidirect,
  kPsl2,
  kRaw,
};

// Abstract syntax of a group expression such as
// "semidirect(elem_abelian(2,3), elem_abelian(2,2), a0)".
struct GroupSpec {
  Constructor kind = Constructor::kCyclic;
  std::vector<std::uint32_t> params;     // integer arguments, in order
  std::vector<GroupSpec> operands;       // direct / semidirect factors
  std::string action_id;                 // semidirect only
  std::vector<Permutation> generators;   // raw only

  // Canonical, whitespace-normalized text; parse(to_string()) round-trips.
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec parse_group_spec(std::string_view text);

// A word in the canonical generators of a group: g0^2*g1 is
// {{0, 2}, {1, 1}}; the empty word is the identity.
using GeneratorWord = std::vector<std::pair<std::uint32_t, std::int32_t>>;

// Images of the normal factor's generators under each generator of the
// acting factor: images[acting_gen][normal_gen].
struct ActionTable {
  std::vector<std::vector<GeneratorWord>> images;

  std::string to_string() const;
  friend bool operator==(const ActionTable&, const ActionTable&) = default;
};

// Text form: per acting generator a comma-separated list of words, acting
// generators separated by ';'. Example: "g1, g0*g1" or "g0^2".
ActionTable parse_action_table(std::string_view text);

class ActionRegistry {
 public:
  void add(const std::string& id, ActionTable table);
  const ActionTable* find(const std::string& id) const;
  const std::map<std::string, ActionTable>& entries() const { return entries_; }

  // Actions needed by the shipped corpus; manifests may add more.
  static const ActionRegistry& builtin();

 private:
  std::map<std::string, ActionTable> entries_;
};

bool is_prime(std::uint64_t n);
// For n = p^k with p prime returns {p, k}.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n);

}  // namespace dsg

#endif  // DSG_GROUP_SPEC_HPP_
