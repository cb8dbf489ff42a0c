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

#include <string>

#include "doctest.h"
#include "dsg/classify.hpp"
#include "dsg/corpus.hpp"
#include "dsg/lattice.hpp"
#include "oracles.hpp"

using namespace dsg;

namespace {

GroupClassification classify_spec(const std::string& spec) {
  RealizeOptions opt;
  opt.actions = &default_corpus().actions;
  return classify(*SubgroupLattice::build(realize(spec, opt)));
}

oracle::Members members_of(const Bitset& b) {
  oracle::Members m;
  b.for_each([&](std::size_t i) { m.push_back(static_cast<ElementId>(i)); });
  return m;
}

// Reference predicates computed straight from the subgroup list.
struct Expected {
  bool abelian, dedekind, iwasawa, nilpotent, solvable;
};

Expected brute_classify(const FiniteGroup& g) {
  Expected e{true, true, true, true, true};
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) e.abelian = false;
  auto subs = oracle::subgroups(g);
  for (const auto& h : subs) {
    if (!oracle::normal(g, h)) e.dedekind = false;
    for (const auto& k : subs) {
      std::size_t hk = oracle::product_size(g, h, k);
      oracle::Members both = h;
      both.insert(both.end(), k.begin(), k.end());
      if (oracle::generated(g, both).size() != hk) e.iwasawa = false;
    }
  }
  // Nilpotent: every maximal subgroup normal.
  for (const auto& h : subs) {
    if (h.size() == g.order()) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (k.size() > h.size() && k.size() < g.order() && oracle::intersect(k, h) == h)
        maximal = false;
    if (maximal && !oracle::normal(g, h)) e.nilpotent = false;
  }
  // Solvable: iterate commutator subgroups.
  oracle::Members cur(g.order());
  for (ElementId i = 0; i < g.order(); ++i) cur[i] = i;
  while (cur.size() > 1) {
    oracle::Members comms;
    for (ElementId a : cur)
      for (ElementId b : cur)
        comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
    oracle::Members next = oracle::generated(g, comms);
    if (next.size() == cur.size()) {
      e.solvable = false;
      break;
    }
    cur = next;
  }
  return e;
}

}  // namespace

TEST_CASE("classification of named groups") {
  auto s4 = classify_spec("symmetric(4)");
  CHECK(s4.solvable);
  CHECK_FALSE(s4.supersolvable);
  CHECK_FALSE(s4.nilpotent);
  CHECK(s4.derived_length == 3);
  REQUIRE(s4.non_prime_index_maximal);

  auto a4 = classify_spec("alternating(4)");
  CHECK(a4.solvable);
  CHECK_FALSE(a4.supersolvable);

  auto s3 = classify_spec("symmetric(3)");
  CHECK(s3.supersolvable);
  CHECK_FALSE(s3.nilpotent);
  CHECK(s3.non_normal_sylow);

  auto q8 = classify_spec("dicyclic(2)");
  CHECK(q8.dedekind);
  CHECK_FALSE(q8.abelian);
  CHECK(q8.p_group);
  CHECK(q8.p == 2);
  CHECK(q8.noncommuting_generators);

  auto z4q8 = classify_spec("direct(cyclic(4),dicyclic(2))");
  CHECK(z4q8.nilpotent);
  CHECK_FALSE(z4q8.dedekind);
  CHECK_FALSE(z4q8.iwasawa);
  CHECK(z4q8.non_permuting_pair);

  auto a5 = classify_spec("alternating(5)");
  CHECK(a5.simple);
  CHECK_FALSE(a5.solvable);
  CHECK(classify_spec("psl2(7)").simple);
  CHECK_FALSE(classify_spec("symmetric(5)").simple);
  CHECK(classify_spec("symmetric(5)").proper_normal_subgroup);

  auto heis = classify_spec("semidirect(elem_abelian(3,2),cyclic(3),heisenberg_27)");
  CHECK(heis.nilpotent);
  CHECK(heis.p == 3);
  CHECK_FALSE(heis.abelian);

  auto z5z8 = classify_spec("semidirect(cyclic(5),cyclic(8),z5_by_z8)");
  CHECK(z5z8.supersolvable);
  CHECK_FALSE(z5z8.nilpotent);

  auto z7 = classify_spec("cyclic(7)");
  CHECK(z7.abelian);
  CHECK(z7.simple);
  CHECK(z7.iwasawa);
  CHECK_FALSE(classify_spec("cyclic(1)").simple);
}

TEST_CASE("implications hold across the fast tier") {
  RealizeOptions opt;
  opt.actions = &default_corpus().actions;
  for (const auto& e : default_corpus().tier_entries(Tier::kFast)) {
    CAPTURE(e.label);
    auto lat = SubgroupLattice::build(realize(e.spec, opt));
    auto c = classify(*lat);
    if (c.abelian) CHECK(c.dedekind);
    if (c.dedekind) CHECK(c.iwasawa);
    if (c.p_group) CHECK(c.nilpotent);
    if (c.nilpotent) CHECK(c.supersolvable);
    if (c.supersolvable) CHECK(c.solvable);
    CHECK(c.supersolvable == has_cyclic_normal_series(*lat));
    CHECK(c.solvable == (c.derived_length > 0 || lat->group().order() == 1));
  }
}

TEST_CASE("classification matches the brute-force oracle on small groups") {
  RealizeOptions opt;
  opt.actions = &default_corpus().actions;
  for (const auto& e : default_corpus().entries) {
    if (e.order > 24) continue;
    CAPTURE(e.label);
    auto g = realize(e.spec, opt);
    auto c = classify(*SubgroupLattice::build(g));
    Expected x = brute_classify(*g);
    CHECK(c.abelian == x.abelian);
    CHECK(c.dedekind == x.dedekind);
    CHECK(c.iwasawa == x.iwasawa);
    CHECK(c.nilpotent == x.nilpotent);
    CHECK(c.solvable == x.solvable);
  }
}

TEST_CASE("derived subgroup") {
  auto g = realize("symmetric(4)");
  Bitset all(g->order());
  all.set_all();
  Bitset d = derived_subgroup(*g, all);
  CHECK(d.count() == 12);
  CHECK(derived_subgroup(*g, d).count() == 4);
  CHECK(members_of(derived_subgroup(*g, derived_subgroup(*g, d))) == oracle::Members{0});
}
