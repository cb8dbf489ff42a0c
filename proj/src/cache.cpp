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

#include "dsg/cache.hpp"

#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "dsg/error.hpp"

namespace dsg {

namespace {

constexpr const char* kMagic = "dsg-lattice 1";

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
  return buf;
}

std::uint64_t text_hash(std::string_view s) {
  return fnv1a64({reinterpret_cast<const unsigned char*>(s.data()), s.size()});
}

[[noreturn]] void corrupt(const std::string& why) {
  throw Error(ErrorCode::kIo, "corrupt lattice cache entry: " + why);
}

}  // namespace

const char* cache_outcome_name(CacheOutcome outcome) {
  switch (outcome) {
    case CacheOutcome::kDisabled:
      return "disabled";
    case CacheOutcome::kHit:
      return "hit";
    case CacheOutcome::kMiss:
      return "miss";
    case CacheOutcome::kCorrupt:
      return "corrupt";
  }
  return "?";
}

std::filesystem::path lattice_cache_path(const std::filesystem::path& dir, const FiniteGroup& g) {
  return dir / (hex64(g.content_hash()) + ".lattice");
}

std::string serialize_lattice(const SubgroupLattice& lat) {
  const FiniteGroup& g = lat.group();
  std::ostringstream out;
  out << kMagic << '\n'
      << "key " << hex64(g.content_hash()) << '\n'
      << "order " << g.order() << '\n'
      << "degree " << g.degree() << '\n'
      << "count " << lat.size() << '\n';
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    const Subgroup& s = lat.subgroup(h);
    const SubgroupFlags& f = lat.flags(h);
    out << s.order << ' ' << f.normal << ' ' << f.maximal << ' ' << f.conjugacy_class << ' '
        << s.generators.size();
    for (ElementId e : s.generators) out << ' ' << e;
    out << ' ' << s.members.word_count();
    for (std::uint64_t w : s.members.words()) out << ' ' << hex64(w);
    out << '\n';
  }
  std::string body = out.str();
  return body + "checksum " + hex64(text_hash(body)) + '\n';
}

std::shared_ptr<const SubgroupLattice> deserialize_lattice(
    std::shared_ptr<const FiniteGroup> group, const std::string& text) {
  auto pos = text.rfind("checksum ");
  if (pos == std::string::npos) corrupt("missing checksum");
  std::string body = text.substr(0, pos);
  std::string stored = text.substr(pos + 9);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  if (stored != hex64(text_hash(body))) corrupt("checksum mismatch");

  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line) || line != kMagic) corrupt("bad header");
  auto field = [&](const char* name) {
    std::string key;
    std::string value;
    if (!(in >> key >> value) || key != name) corrupt(std::string("missing ") + name);
    return value;
  };
  if (field("key") != hex64(group->content_hash())) corrupt("key mismatch");
  if (field("order") != std::to_string(group->order())) corrupt("order mismatch");
  if (field("degree") != std::to_string(group->degree())) corrupt("degree mismatch");
  std::size_t count = 0;
  try {
    count = std::stoull(field("count"));
  } catch (const std::exception&) {
    corrupt("bad count");
  }
  if (count == 0 || count > 10'000'000) corrupt("bad count");

  std::vector<Subgroup> subgroups;
  std::vector<SubgroupFlags> flags;
  subgroups.reserve(count);
  const std::size_t words = (group->order() + 63) / 64;
  for (std::size_t i = 0; i < count; ++i) {
    Subgroup s;
    SubgroupFlags f;
    std::size_t ngens = 0;
    std::size_t nwords = 0;
    if (!(in >> s.order >> f.normal >> f.maximal >> f.conjugacy_class >> ngens))
      corrupt("truncated subgroup record");
    if (ngens > group->order()) corrupt("bad generator count");
    s.generators.resize(ngens);
    for (auto& e : s.generators)
      if (!(in >> e) || e >= group->order()) corrupt("bad generator");
    if (!(in >> nwords) || nwords != words) corrupt("bad word count");
    s.members = Bitset(group->order());
    auto span = s.members.mutable_words();
    for (std::size_t w = 0; w < nwords; ++w) {
      std::string hx;
      if (!(in >> hx) || hx.size() != 16) corrupt("bad member word");
      try {
        span[w] = std::stoull(hx, nullptr, 16);
      } catch (const std::exception&) {
        corrupt("bad member word");
      }
    }
    if (s.members.complement().complement() != s.members) corrupt("stray member bits");
    if (s.members.count() != s.order) corrupt("order does not match members");
    subgroups.push_back(std::move(s));
    flags.push_back(f);
  }
  std::string rest;
  if (in >> rest) corrupt("trailing data");

  std::shared_ptr<const SubgroupLattice> lat;
  try {
    lat = std::make_shared<const SubgroupLattice>(std::move(group), std::move(subgroups));
  } catch (const Error& e) {
    corrupt(e.what());
  }
  for (SubgroupId h = 0; h < lat->size(); ++h)
    if (!(lat->flags(h) == flags[h])) corrupt("flags disagree with recomputation");
  return lat;
}

CachedLattice load_or_build_lattice(std::shared_ptr<const FiniteGroup> group,
                                    const std::filesystem::path& dir, std::size_t subgroup_cap) {
  CachedLattice result;
  if (dir.empty()) {
    result.lattice = SubgroupLattice::build(std::move(group), subgroup_cap);
    return result;
  }
  const auto path = lattice_cache_path(dir, *group);
  result.outcome = CacheOutcome::kMiss;
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        result.lattice = deserialize_lattice(group, buf.str());
        result.outcome = CacheOutcome::kHit;
        return result;
      } catch (const Error& e) {
        result.outcome = CacheOutcome::kCorrupt;
        result.warning = path.string() + ": " + e.what() + "; recomputing";
      }
    }
  }
  result.lattice = SubgroupLattice::build(group, subgroup_cap);

  static std::atomic<std::uint64_t> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "-" +
         std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write cache file " + tmp.string());
    out << serialize_lattice(*result.lattice);
    if (!out) throw Error(ErrorCode::kIo, "cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot install cache file " + path.string());
  }
  return result;
}

}  // namespace dsg
