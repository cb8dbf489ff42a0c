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

#ifndef DSG_GROUP_HPP_
#define DSG_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dsg/bitset.hpp"
#include "dsg/group_spec.hpp"
#include "dsg/permutation.hpp"

namespace dsg {

using ElementId = std::uint32_t;

inline constexpr std::uint64_t kDefaultOrderCap = 20'000;

// Canonically sorted element table: elements ordered lexicographically by
// their image arrays, flattened. The identity is always element 0.
struct ElementTable {
  std::size_t degree = 0;
  std::vector<Point> images;  // size() * degree entries

  std::size_t size() const { return degree ? images.size() / degree : 0; }
};

// Breadth-first closure under right multiplication by the generators,
// then canonically sorted. Throws kOrderCap past `order_cap` elements.
ElementTable enumerate_elements(std::span<const Permutation> generators,
                                std::uint64_t order_cap = kDefaultOrderCap);

// Group order from a Schreier-Sims base and strong generating set;
// independent of enumerate_elements. Saturates at UINT64_MAX.
std::uint64_t stabilizer_chain_order(std::span<const Permutation> generators);

/**
 * A concrete permutation group with its full, canonically ordered element
 * table. Immutable after construction; all queries are const and safe to
 * share across threads.
 *
 * Products follow Permutation: mul(a, b) is the element x -> a(b(x)).
 */
class FiniteGroup {
 public:
  // Enumerates the group generated by `generators` (uniform degree, at least
  // one) and checks the element count against the stabilizer chain order.
  FiniteGroup(std::vector<Permutation> generators, std::string label,
              std::uint64_t order_cap = kDefaultOrderCap);

  std::size_t degree() const { return table_.degree; }
  std::size_t order() const { return table_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  // Element ids of the generators, in generator order.
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const ElementTable& table() const { return table_; }
  std::uint64_t chain_order() const { return chain_order_; }

  std::span<const Point> images(ElementId e) const {
    return {table_.images.data() + static_cast<std::size_t>(e) * table_.degree, table_.degree};
  }
  Permutation element(ElementId e) const;

  static constexpr ElementId identity() { return 0; }
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  ElementId conjugate(ElementId g, ElementId x) const {  // g x g^-1
    return mul(mul(g, x), inverse_[g]);
  }
  std::uint32_t element_order(ElementId a) const { return element_order_[a]; }

  // Index of a permutation of the same degree, or -1 when absent.
  long find(std::span<const Point> images) const;
  ElementId index_of(const Permutation& p) const;

  // Smallest subgroup containing the given elements (breadth-first closure).
  Bitset closure(std::span<const ElementId> elements) const;
  // Members of the cyclic subgroup generated by `x`.
  Bitset cyclic_closure(ElementId x) const;

  // Stable 64-bit content hash of the canonical element table.
  std::uint64_t content_hash() const { return content_hash_; }

 private:
  ElementId compose_lookup(ElementId a, ElementId b) const;

  std::string label_;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  ElementTable table_;
  std::uint64_t chain_order_ = 0;
  std::vector<std::uint16_t> cayley_;  // order^2 entries when small enough
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::uint64_t content_hash_ = 0;
};

struct RealizeOptions {
  std::uint64_t order_cap = kDefaultOrderCap;
  // Consulted for semidirect action ids; falls back to the built-in actions.
  const ActionRegistry* actions = nullptr;
};

// Builds the canonical permutation representation of a spec. Direct
// products act on disjoint point sets; semidirect(N, K, a) acts on the
// elements of N (N by left translation, K through the action) plus K's own
// points. The result's order is checked against the constructor's
// theoretical order.
std::shared_ptr<const FiniteGroup> realize(const GroupSpec& spec,
                                           const RealizeOptions& options = {});
std::shared_ptr<const FiniteGroup> realize(std::string_view spec_text,
                                           const RealizeOptions& options = {});

// Theoretical order of a construction (0 for raw groups, where none is known).
std::uint64_t theoretical_order(const GroupSpec& spec);

// The action of G on the left cosets of a normal subgroup N, as a
// permutation group of degree [G:N], plus the projection G -> G/N.
struct QuotientGroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<ElementId> projection;  // element of G -> element of G/N
  std::vector<std::uint32_t> coset_of;  // element of G -> coset index
};

QuotientGroup quotient_group(const FiniteGroup& g, const Bitset& normal_subgroup);

std::uint64_t fnv1a64(std::span<const unsigned char> bytes,
                      std::uint64_t seed = 1469598103934665603ULL);

}  // namespace dsg

#endif  // DSG_GROUP_HPP_
