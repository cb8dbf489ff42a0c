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

#include <set>
#include <vector>

#include "doctest.h"
#include "dsg/corpus.hpp"
#include "dsg/error.hpp"
#include "dsg/lattice.hpp"
#include "oracles.hpp"

using namespace dsg;

namespace {

oracle::Members members_of(const Bitset& b) {
  oracle::Members m;
  b.for_each([&](std::size_t i) { m.push_back(static_cast<ElementId>(i)); });
  return m;
}

std::shared_ptr<const SubgroupLattice> lattice_of(const char* spec) {
  return SubgroupLattice::build(realize(spec));
}

// Exhaustive comparison of one lattice against the brute-force oracle.
void check_against_oracle(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  std::set<oracle::Members> expected = oracle::subgroups(g);
  std::set<oracle::Members> actual;
  for (const auto& s : lat.subgroups()) {
    CHECK(s.order == s.members.count());
    actual.insert(members_of(s.members));
  }
  REQUIRE(actual == expected);
  const std::size_t n = lat.size();
  std::vector<oracle::Members> m(n);
  for (SubgroupId h = 0; h < n; ++h) m[h] = members_of(lat.subgroup(h).members);
  for (SubgroupId h = 0; h < n; ++h) {
    CHECK(lat.is_normal(h) == oracle::normal(g, m[h]));
    bool maximal = h != lat.whole();
    for (SubgroupId k = 0; k < n && maximal; ++k)
      if (m[k].size() > m[h].size() && m[k].size() < g.order() &&
          oracle::intersect(m[k], m[h]) == m[h])
        maximal = false;
    CHECK(lat.is_maximal(h) == maximal);
    for (SubgroupId k = 0; k < n; ++k) {
      oracle::Members both = m[h];
      both.insert(both.end(), m[k].begin(), m[k].end());
      CHECK(m[lat.join(h, k)] == oracle::generated(g, both));
      CHECK(m[lat.meet(h, k)] == oracle::intersect(m[h], m[k]));
      CHECK(lat.product_size(h, k) == oracle::product_size(g, m[h], m[k]));
      CHECK(lat.contains(h, k) == (oracle::intersect(m[h], m[k]) == m[k]));
    }
    // Conjugacy classes against direct conjugation.
    std::set<oracle::Members> conj;
    for (ElementId x = 0; x < g.order(); ++x) {
      oracle::Members c;
      for (ElementId y : m[h]) c.push_back(g.conjugate(x, y));
      std::sort(c.begin(), c.end());
      conj.insert(c);
    }
    std::set<oracle::Members> listed;
    for (SubgroupId c : lat.conjugates(h)) listed.insert(m[c]);
    CHECK(listed == conj);
  }
}

}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(lattice_of("symmetric(4)")->size() == 30);
  CHECK(lattice_of("dicyclic(2)")->size() == 6);
  CHECK(lattice_of("alternating(5)")->size() == 59);
  CHECK(lattice_of("dihedral(4)")->size() == 10);
  CHECK(lattice_of("cyclic(12)")->size() == 6);
  CHECK(lattice_of("cyclic(1)")->size() == 1);
  CHECK(lattice_of("elem_abelian(2,3)")->size() == 16);
  CHECK(lattice_of("psl2(7)")->size() == 179);
}

TEST_CASE("subgroups are ordered by size then members") {
  auto lat = lattice_of("symmetric(4)");
  CHECK(lat->order(lat->trivial()) == 1);
  CHECK(lat->order(lat->whole()) == 24);
  for (SubgroupId h = 1; h < lat->size(); ++h) {
    const auto& a = lat->subgroup(h - 1);
    const auto& b = lat->subgroup(h);
    CHECK((a.order < b.order || (a.order == b.order && Bitset::lex_less(a.members, b.members))));
  }
  for (SubgroupId h = 0; h < lat->size(); ++h) {
    CHECK(lat->find(lat->subgroup(h).members) == h);
    CHECK(lat->group().closure(lat->subgroup(h).generators) == lat->subgroup(h).members);
  }
}

TEST_CASE("small corpus groups match the brute-force oracle") {
  std::size_t checked = 0;
  for (const auto& e : default_corpus().entries) {
    if (e.order > 24) continue;
    CAPTURE(e.label);
    RealizeOptions opt;
    opt.actions = &default_corpus().actions;
    check_against_oracle(*SubgroupLattice::build(realize(e.spec, opt)));
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("normalizers, Sylow subgroups and Frattini") {
  auto s4 = lattice_of("symmetric(4)");
  CHECK(s4->sylow_subgroups(2).size() == 3);
  CHECK(s4->sylow_subgroups(3).size() == 4);
  CHECK(s4->primes() == std::vector<std::uint32_t>{2, 3});
  CHECK(s4->order(s4->frattini()) == 1);
  CHECK(s4->normal_subgroups().size() == 4);
  for (SubgroupId h = 0; h < s4->size(); ++h) {
    SubgroupId nh = s4->normalizer(h);
    CHECK(s4->order(nh) * s4->conjugates(h).size() == 24);
    CHECK(s4->contains(nh, h));
  }
  auto a5 = lattice_of("alternating(5)");
  CHECK(a5->sylow_subgroups(2).size() == 5);
  CHECK(a5->sylow_subgroups(3).size() == 10);
  CHECK(a5->sylow_subgroups(5).size() == 6);
  CHECK(a5->maximal_subgroups().size() == 21);
  CHECK(lattice_of("dicyclic(2)")->order(lattice_of("dicyclic(2)")->frattini()) == 2);
  auto z8 = lattice_of("cyclic(8)");
  CHECK(z8->order(z8->frattini()) == 4);
}

TEST_CASE("subgroup cap") {
  auto g = realize("symmetric(4)");
  try {
    enumerate_subgroups(*g, 10);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSubgroupCap);
  }
}
