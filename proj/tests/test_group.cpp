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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "dsg/error.hpp"
#include "dsg/group.hpp"
#include "dsg/group_spec.hpp"
#include "dsg/permutation.hpp"

using namespace dsg;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("permutation products apply the right factor first") {
  Permutation a = Permutation::from_cycles(3, {{0, 1}});
  Permutation b = Permutation::from_cycles(3, {{1, 2}});
  Permutation ab = a * b;
  // (a*b)(1) = a(b(1)) = a(2) = 2
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 0);
  CHECK(ab(0) == 1);
  CHECK((ab * ab.inverse()).is_identity());
  CHECK(Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}}).to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
}

TEST_CASE("cycle notation parsing and errors") {
  auto parsed = parse_cycles("(0 1 2)(4 5)");
  REQUIRE(parsed.cycles.size() == 2);
  CHECK(parsed.max_point == 5);
  CHECK(code_of([] { parse_cycles("(0 1"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_cycles("0 1)"); }) == ErrorCode::kParse);
  CHECK(code_of([] { Permutation::from_cycles(3, {{0, 1, 0}}); }) == ErrorCode::kDomain);
  CHECK(code_of([] { Permutation(std::vector<Point>{0, 0, 1}); }) == ErrorCode::kDomain);
}

TEST_CASE("constructor orders") {
  struct Case {
    const char* spec;
    std::size_t order;
  };
  const Case cases[] = {
      {"cyclic(1)", 1},         {"cyclic(12)", 12},
      {"dihedral(1)", 2},       {"dihedral(2)", 4},
      {"dihedral(3)", 6},       {"dihedral(8)", 16},
      {"dicyclic(2)", 8},       {"dicyclic(3)", 12},
      {"symmetric(4)", 24},     {"symmetric(5)", 120},
      {"alternating(4)", 12},   {"alternating(5)", 60},
      {"elem_abelian(2,3)", 8}, {"elem_abelian(3,2)", 9},
      {"psl2(2)", 6},           {"psl2(3)", 12},
      {"psl2(4)", 60},          {"psl2(5)", 60},
      {"psl2(7)", 168},         {"psl2(8)", 504},
      {"psl2(9)", 360},         {"psl2(11)", 660},
      {"direct(symmetric(3),cyclic(5))", 30},
      {"raw((0 1 2 3),(0 2))", 8},
  };
  for (const auto& c : cases) {
    CAPTURE(c.spec);
    auto g = realize(c.spec);
    CHECK(g->order() == c.order);
    CHECK(g->chain_order() == c.order);
    GroupSpec spec = parse_group_spec(c.spec);
    // Raw generators have no closed-form order.
    CHECK(theoretical_order(spec) == (spec.kind == Constructor::kRaw ? 0 : c.order));
  }
}

TEST_CASE("semidirect products use registered actions") {
  ActionRegistry reg;
  reg.add("inv", parse_action_table("g0^2"));
  reg.add("sq", parse_action_table("g0^2"));
  RealizeOptions opt;
  opt.actions = &reg;
  CHECK(realize("semidirect(cyclic(5),cyclic(8),sq)", opt)->order() == 40);
  CHECK(realize("semidirect(cyclic(3),cyclic(2),inv)", opt)->order() == 6);
  // x -> 2x has order 4 in Aut(Z5), which does not divide 3.
  CHECK(code_of([&] { realize("semidirect(cyclic(5),cyclic(3),sq)", opt); }) == ErrorCode::kAction);
  CHECK(code_of([&] { realize("semidirect(cyclic(5),cyclic(8),nope)", opt); }) ==
        ErrorCode::kAction);
  // The built-in registry carries the corpus actions.
  CHECK(realize("semidirect(elem_abelian(3,2),cyclic(3),heisenberg_27)")->order() == 27);
}

TEST_CASE("spec parsing round trips and rejects bad input") {
  for (const char* text :
       {"cyclic(7)", "direct(dihedral(4), cyclic(3))", "semidirect(cyclic(5), cyclic(8), z5_by_z8)",
        "elem_abelian(2,3)", "raw((0 1 2), (0 1))", "psl2(13)"}) {
    CAPTURE(text);
    GroupSpec s = parse_group_spec(text);
    CHECK(parse_group_spec(s.to_string()) == s);
  }
  CHECK(code_of([] { parse_group_spec("cyclic("); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_group_spec("frobenius(3)"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_group_spec("cyclic(4) junk"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_group_spec("cyclic(0)"); }) == ErrorCode::kDomain);
  CHECK(code_of([] { parse_group_spec("elem_abelian(4,2)"); }) == ErrorCode::kDomain);
  CHECK(code_of([] { parse_group_spec("psl2(6)"); }) == ErrorCode::kDomain);
}

TEST_CASE("order cap is enforced before enumeration") {
  RealizeOptions opt;
  opt.order_cap = 1000;
  CHECK(code_of([&] { realize("symmetric(7)", opt); }) == ErrorCode::kOrderCap);
  CHECK(code_of([&] { realize("raw((0 1 2 3 4 5 6), (0 1))", opt); }) == ErrorCode::kOrderCap);
}

TEST_CASE("element table is a group under the stored product") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"symmetric(4)", "dicyclic(3)", "direct(dihedral(4),cyclic(3))"}) {
    CAPTURE(spec);
    auto g = realize(spec);
    const std::size_t n = g->order();
    CHECK(g->element(FiniteGroup::identity()).is_identity());
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (int i = 0; i < 500; ++i) {
      ElementId a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
      CHECK(g->element(g->mul(a, b)) == g->element(a) * g->element(b));
      CHECK(g->mul(a, g->inverse(a)) == FiniteGroup::identity());
      CHECK(g->index_of(g->element(a)) == a);
    }
    for (ElementId a = 0; a < n; ++a) {
      Bitset cyc = g->cyclic_closure(a);
      CHECK(cyc.count() == g->element_order(a));
    }
  }
}

TEST_CASE("content hash depends only on the element set") {
  auto s3 = realize("symmetric(3)");
  auto raw = realize("raw((0 1 2),(0 1))");
  auto other = realize("raw((0 1),(0 1 2))");
  CHECK(s3->content_hash() == raw->content_hash());
  CHECK(raw->content_hash() == other->content_hash());
  CHECK(s3->content_hash() != realize("cyclic(6)")->content_hash());
}

TEST_CASE("quotient groups") {
  auto s4 = realize("symmetric(4)");
  // Klein four subgroup {e, (01)(23), (02)(13), (03)(12)}.
  std::vector<ElementId> v4 = {s4->index_of(Permutation::from_cycles(4, {{0, 1}, {2, 3}})),
                               s4->index_of(Permutation::from_cycles(4, {{0, 2}, {1, 3}}))};
  Bitset k = s4->closure(v4);
  CHECK(k.count() == 4);
  QuotientGroup q = quotient_group(*s4, k);
  CHECK(q.group->order() == 6);
  for (ElementId a = 0; a < s4->order(); ++a)
    for (ElementId b = 0; b < s4->order(); b += 5)
      CHECK(q.projection[s4->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
  std::vector<ElementId> transposition = {s4->index_of(Permutation::from_cycles(4, {{0, 1}}))};
  CHECK(code_of([&] { quotient_group(*s4, s4->closure(transposition)); }) ==
        ErrorCode::kNotNormal);
}
