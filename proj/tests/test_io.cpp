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

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dsg/cache.hpp"
#include "dsg/corpus.hpp"
#include "dsg/error.hpp"
#include "dsg/graphs.hpp"
#include "dsg/harness.hpp"
#include "dsg/report.hpp"
#include "json.hpp"

using namespace dsg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dsg_test_io_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
            std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string manifest_error(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    return e.what();
  }
  FAIL("manifest accepted");
  return {};
}

}  // namespace

TEST_CASE("lattice cache round trip") {
  TempDir dir;
  auto g = realize("alternating(5)");
  auto first = load_or_build_lattice(g, dir.path);
  CHECK(first.outcome == CacheOutcome::kMiss);
  CHECK(fs::exists(lattice_cache_path(dir.path, *g)));
  auto second = load_or_build_lattice(g, dir.path);
  CHECK(second.outcome == CacheOutcome::kHit);
  REQUIRE(second.lattice->size() == first.lattice->size());
  for (SubgroupId h = 0; h < first.lattice->size(); ++h) {
    CHECK(second.lattice->subgroup(h).members == first.lattice->subgroup(h).members);
    CHECK(second.lattice->flags(h) == first.lattice->flags(h));
  }
  CHECK(serialize_lattice(*second.lattice) == serialize_lattice(*first.lattice));
  CHECK(load_or_build_lattice(g, {}).outcome == CacheOutcome::kDisabled);
}

TEST_CASE("presentations with the same elements share a cache entry") {
  TempDir dir;
  auto a = realize("symmetric(3)");
  auto b = realize("raw((0 1),(0 1 2))");
  CHECK(lattice_cache_path(dir.path, *a) == lattice_cache_path(dir.path, *b));
  CHECK(load_or_build_lattice(a, dir.path).outcome == CacheOutcome::kMiss);
  CHECK(load_or_build_lattice(b, dir.path).outcome == CacheOutcome::kHit);
}

TEST_CASE("corrupt cache entries are discarded with a warning") {
  TempDir dir;
  auto g = realize("symmetric(4)");
  load_or_build_lattice(g, dir.path);
  const fs::path file = lattice_cache_path(dir.path, *g);
  const std::string good = read_file(file);

  auto expect_corrupt = [&](const std::string& text) {
    write_file(file, text);
    auto r = load_or_build_lattice(g, dir.path);
    CHECK(r.outcome == CacheOutcome::kCorrupt);
    CHECK(r.warning.find("corrupt lattice cache entry") != std::string::npos);
    CHECK(r.lattice->size() == 30);
    // The rebuilt entry replaces the damaged one.
    CHECK(read_file(file) == good);
  };
  expect_corrupt("");
  expect_corrupt("garbage\n");
  expect_corrupt(good.substr(0, good.size() / 2));
  std::string flipped = good;
  flipped[flipped.size() / 2] = flipped[flipped.size() / 2] == '1' ? '2' : '1';
  expect_corrupt(flipped);

  CHECK_THROWS_AS(deserialize_lattice(realize("cyclic(24)"), good), Error);
}

TEST_CASE("manifest parsing") {
  Corpus c = parse_manifest(
      "# comment line\n"
      "action flip = g0^-1   # inversion\n"
      "Z3 = cyclic(3)\n"
      "\n"
      "S3_alt = semidirect(cyclic(3), cyclic(2), flip)\n"
      "Big = symmetric(6)\n"
      "Huge = psl2(13)\n");
  REQUIRE(c.entries.size() == 4);
  CHECK(c.entries[1].spec_text == "semidirect(cyclic(3), cyclic(2), flip)");
  CHECK(c.entries[1].order == 6);
  CHECK(c.entries[1].line == 5);
  CHECK(c.tier_entries(Tier::kFast).size() == 2);
  CHECK(c.tier_entries(Tier::kStandard).size() == 2);
  CHECK(c.tier_entries(Tier::kLong).size() == 4);
  CHECK(c.find("Big")->order == 720);
  CHECK(c.find("nope") == nullptr);
  CHECK(parse_tier("standard") == Tier::kStandard);
  CHECK_THROWS_AS(parse_tier("slow"), Error);

  CHECK(manifest_error("Z3 cyclic(3)\n").find("line 1") != std::string::npos);
  CHECK(manifest_error("Z3 = cyclic(3)\nZ3 = cyclic(3)\n").find("duplicate label") !=
        std::string::npos);
  CHECK(manifest_error("A = cyclic(3)\nB = semidirect(cyclic(3),cyclic(2),x)\n")
            .find("line 2: unknown action id 'x'") != std::string::npos);
  CHECK(manifest_error("bad label = cyclic(3)\n").find("invalid label") != std::string::npos);
  CHECK(manifest_error("X = cyclic(\n").find("line 1") != std::string::npos);
  CHECK(manifest_error("action a = g0\naction a = g0\n").find("duplicate action") !=
        std::string::npos);
  CHECK(manifest_error("X =\n").find("missing group spec") != std::string::npos);
}

TEST_CASE("default corpus") {
  const Corpus& c = default_corpus();
  CHECK(c.manifest_hash == parse_manifest(default_manifest_text()).manifest_hash);
  for (const char* label : {"S4", "Q8", "A5", "D4xZ3", "Q8xZ3", "S3xZ5", "S3xZ7", "D5xZ3",
                            "Z5sdZ8", "Heis27", "Z4xQ8", "gap_32_49_like", "PSL2_7", "PSL2_13"})
    CHECK_MESSAGE(c.find(label) != nullptr, label);
  for (const auto& e : c.tier_entries(Tier::kFast)) CHECK(e.order <= 200);
  CHECK(c.find("PSL2_13")->order == 1092);
}

TEST_CASE("serializers are deterministic and well formed") {
  auto lat = SubgroupLattice::build(realize("dihedral(4)"));
  auto dstar = build_graph(lat, GraphKind::kDifferenceStar);
  auto j = nlohmann::json::parse(graph_json(dstar));
  CHECK(j["kind"] == "dstar");
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 4);
  CHECK(graph_json(dstar) == graph_json(build_graph(lat, GraphKind::kDifferenceStar)));
  std::string dot = graph_dot(dstar);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 9);

  auto d = build_graph(SubgroupLattice::build(realize("cyclic(6)")), GraphKind::kDifference);
  auto a = nlohmann::json::parse(analysis_json(d, analyze(d.graph)));
  CHECK(a["girth"] == "inf");
  CHECK(a["edge_count"] == 0);

  auto info = nlohmann::json::parse(group_info_json(*lat, classify(*lat)));
  CHECK(info["order"] == 8);
  CHECK(info["subgroup_count"] == 10);
  auto lj = nlohmann::json::parse(lattice_json(*lat));
  CHECK(lj["subgroups"].size() == 10);

  auto reg = nlohmann::json::parse(registry_json());
  CHECK(reg["theorems"].size() == theorem_registry().size());

  RunOptions opt;
  opt.theorem_filter = {"T-6.1"};
  Corpus c = parse_manifest("S3 = symmetric(3)\nZ2 = cyclic(2)\n");
  auto rj = nlohmann::json::parse(run_report_json(run_corpus(c, opt)));
  CHECK(rj["provenance"]["tool"] == "dsg");
  CHECK(rj["provenance"]["manifest_hash"] == hex_hash(c.manifest_hash));
  CHECK(rj["exit_code"] == 0);
}
