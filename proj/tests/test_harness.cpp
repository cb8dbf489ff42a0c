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
#include <string>

#include "doctest.h"
#include "dsg/corpus.hpp"
#include "dsg/error.hpp"
#include "dsg/harness.hpp"
#include "dsg/report.hpp"

using namespace dsg;

namespace {

GroupBundle bundle_of(const std::string& label) {
  const CorpusEntry* e = default_corpus().find(label);
  REQUIRE(e != nullptr);
  BundleOptions opt;
  opt.actions = &default_corpus().actions;
  return compute_bundle(e->label, e->spec, opt);
}

VerdictStatus status_of(const char* id, const GroupBundle& b) {
  const TheoremCheck* c = find_check(id);
  REQUIRE(c != nullptr);
  return verify(*c, b).status;
}

Corpus small_corpus() {
  return parse_manifest(
      "action z5_by_z8 = g0^2\n"
      "S3 = symmetric(3)\n"
      "D4 = dihedral(4)\n"
      "Q8 = dicyclic(2)\n"
      "A4 = alternating(4)\n"
      "Z6 = cyclic(6)\n"
      "Z5sdZ8 = semidirect(cyclic(5),cyclic(8),z5_by_z8)\n");
}

}  // namespace

TEST_CASE("registry is complete and unique") {
  const std::set<std::string> expected = {
      "T-2.2a", "T-2.2b", "T-2.2c", "T-2.2d", "T-2.2e", "T-2.2f", "T-2.2g",
      "T-2.3",  "T-2.4a", "T-2.4b", "T-2.5",  "T-2.6",  "T-2.7",  "T-2.8",
      "T-2.9",  "T-2.10", "T-3.1",  "T-3.2",  "T-3.3",  "T-3.4",  "T-4.1",
      "T-4.2",  "T-5.1",  "T-5.2",  "T-5.3",  "T-5.4",  "T-6.1",  "T-6.2"};
  std::set<std::string> seen;
  for (const auto& c : theorem_registry()) {
    CHECK(seen.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.hypothesis.empty());
    CHECK_FALSE(c.conclusion.empty());
    CHECK_FALSE(c.vacuity.empty());
    CHECK(c.evaluate != nullptr);
  }
  CHECK(seen == expected);
  CHECK(find_check("T-9.9") == nullptr);
}

TEST_CASE("individual verdicts on known groups") {
  auto a5 = bundle_of("A5");
  CHECK(status_of("T-2.5", a5) == VerdictStatus::kConfirmed);
  CHECK(status_of("T-6.2", a5) == VerdictStatus::kVacuous);
  CHECK(status_of("T-2.10", a5) == VerdictStatus::kConfirmed);

  auto d4 = bundle_of("D4");
  CHECK(status_of("T-2.6", d4) == VerdictStatus::kConfirmed);
  CHECK(status_of("T-2.4b", d4) == VerdictStatus::kConfirmed);
  CHECK(status_of("T-3.4", d4) == VerdictStatus::kConfirmed);
  CHECK(d4.dstar_cycle_length == 4u);

  auto s3 = bundle_of("S3");
  CHECK(status_of("T-3.4", s3) == VerdictStatus::kConfirmed);
  CHECK(status_of("T-3.3", s3) == VerdictStatus::kConfirmed);
  CHECK(status_of("T-2.4a", s3) == VerdictStatus::kVacuous);
  CHECK(status_of("T-6.1", s3) == VerdictStatus::kConfirmed);

  auto z6 = bundle_of("Z6");
  CHECK(status_of("T-2.8", z6) == VerdictStatus::kVacuous);
  CHECK(status_of("T-2.7", z6) == VerdictStatus::kConfirmed);
}

TEST_CASE("checks detect falsified hypotheses") {
  // Declaring S3 nilpotent must expose adjacent conjugates.
  auto s3 = bundle_of("S3");
  s3.classification.nilpotent = true;
  TheoremVerdict v = verify(*find_check("T-2.4a"), s3);
  CHECK(v.status == VerdictStatus::kCounterexample);
  CHECK(v.witness.size() == 2);

  auto z6 = bundle_of("Z6");
  z6.classification.nilpotent = false;
  v = verify(*find_check("T-2.7"), z6);
  CHECK(v.status == VerdictStatus::kCounterexample);
  CHECK_FALSE(v.witness.empty());

  auto a4 = bundle_of("A4");
  a4.classification.solvable = false;
  CHECK((status_of("T-4.2", a4) == VerdictStatus::kCounterexample ||
         status_of("T-6.2", a4) == VerdictStatus::kCounterexample));
}

TEST_CASE("counterexample without witness is an internal error") {
  TheoremCheck broken = *find_check("T-2.7");
  broken.evaluate = [](const GroupBundle&) {
    CheckOutcome out;
    out.status = VerdictStatus::kCounterexample;
    return out;
  };
  try {
    verify(broken, bundle_of("Z6"));
    FAIL("expected an internal error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInternal);
  }
}

TEST_CASE("budget exhaustion yields unverified, never a counterexample") {
  const CorpusEntry* e = default_corpus().find("A5");
  BundleOptions opt;
  opt.budgets.clique = 1;
  opt.budgets.independence = 1;
  auto b = compute_bundle(e->label, e->spec, opt);
  for (const char* id : {"T-5.1", "T-5.2", "T-5.3", "T-5.4", "T-6.1", "T-6.2"}) {
    CAPTURE(id);
    VerdictStatus s = status_of(id, b);
    CHECK(s != VerdictStatus::kCounterexample);
    CHECK(s != VerdictStatus::kConfirmed);
  }
}

TEST_CASE("corpus runs are deterministic across thread counts") {
  Corpus c = small_corpus();
  RunOptions one;
  one.threads = 1;
  RunOptions many = one;
  many.threads = 4;
  RunReport a = run_corpus(c, one);
  RunReport b = run_corpus(c, many);
  CHECK(a.groups == std::vector<std::string>{"S3", "D4", "Q8", "A4", "Z6", "Z5sdZ8"});
  CHECK(a.matrix == b.matrix);
  CHECK(run_report_json(a) == run_report_json(b));
  CHECK(run_report_text(a) == run_report_text(b));
  CHECK(a.total.counterexample == 0);
  CHECK(a.exit_code() == 0);
  CHECK(a.total.vacuous + a.total.confirmed + a.total.unverified ==
        a.groups.size() * theorem_registry().size());
}

TEST_CASE("theorem filter") {
  Corpus c = small_corpus();
  RunOptions opt;
  opt.theorem_filter = {"T-6.1", "T-2.5"};
  RunReport r = run_corpus(c, opt);
  CHECK(r.theorems == std::vector<std::string>{"T-2.5", "T-6.1"});
  opt.theorem_filter = {"T-0.0"};
  CHECK_THROWS_AS(run_corpus(c, opt), Error);
}

TEST_CASE("group isomorphism helper") {
  auto iso = [](const char* a, const char* b) { return groups_isomorphic(*realize(a), *realize(b)); };
  CHECK(iso("alternating(5)", "psl2(4)") == true);
  CHECK(iso("alternating(5)", "psl2(5)") == true);
  CHECK(iso("dihedral(3)", "symmetric(3)") == true);
  CHECK(iso("dihedral(4)", "dicyclic(2)") == false);
  CHECK(iso("direct(cyclic(4),cyclic(2))", "cyclic(8)") == false);
  CHECK(iso("cyclic(6)", "direct(cyclic(2),cyclic(3))") == true);
}

TEST_CASE("order-32 action scan reproduces the frozen manifest entry") {
  GapScanResult r = find_gap3249_action();
  const ActionTable* frozen = default_corpus().actions.find("gap_32_49_action");
  REQUIRE(frozen != nullptr);
  CHECK(r.action == *frozen);
  const CorpusEntry* e = default_corpus().find("gap_32_49_like");
  REQUIRE(e != nullptr);
  CHECK(r.spec == e->spec);

  auto b = bundle_of("gap_32_49_like");
  CHECK(b.group->order() == 32);
  CHECK(b.classification.nilpotent);
  CHECK_FALSE(b.report.bipartite);
  CHECK(b.dstar_components.count > 1);
}

TEST_CASE("hunts over a small corpus") {
  Corpus c = parse_manifest(
      "S3xZ5 = direct(symmetric(3),cyclic(5))\n"
      "S3xZ7 = direct(symmetric(3),cyclic(7))\n"
      "D3 = dihedral(3)\n"
      "S3 = symmetric(3)\n"
      "A5 = alternating(5)\n"
      "Z4 = cyclic(4)\n"
      "Z9 = cyclic(9)\n");
  RunOptions opt;
  auto h3 = hunt("H-3", c, opt);
  CHECK_FALSE(h3.has_counterexample());
  bool pair_found = false;
  for (const auto& f : h3.findings)
    if (f.groups == std::vector<std::string>{"S3xZ5", "S3xZ7"}) pair_found = true;
  CHECK(pair_found);
  for (const auto& id : hunt_ids()) {
    CAPTURE(id);
    auto r = hunt(id, c, opt);
    CHECK(r.id == id);
    CHECK_FALSE(r.has_counterexample());
    CHECK(hunt_json(r) == hunt_json(hunt(id, c, opt)));
  }
  CHECK_THROWS_AS(hunt("H-9", c, opt), Error);
}
