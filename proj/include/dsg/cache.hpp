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

#ifndef DSG_CACHE_HPP_
#define DSG_CACHE_HPP_

#include <filesystem>
#include <memory>
#include <string>

#include "dsg/lattice.hpp"

namespace dsg {

enum class CacheOutcome { kDisabled, kHit, kMiss, kCorrupt };

const char* cache_outcome_name(CacheOutcome outcome);

// Path of the cache file for a group: <dir>/<content hash>.lattice.
std::filesystem::path lattice_cache_path(const std::filesystem::path& dir, const FiniteGroup& g);

// Text serialization with a trailing checksum line.
std::string serialize_lattice(const SubgroupLattice& lat);
// Throws Error(kIo) on any format, checksum, or consistency problem.
std::shared_ptr<const SubgroupLattice> deserialize_lattice(
    std::shared_ptr<const FiniteGroup> group, const std::string& text);

struct CachedLattice {
  std::shared_ptr<const SubgroupLattice> lattice;
  CacheOutcome outcome = CacheOutcome::kDisabled;
  std::string warning;  // set when a corrupt entry was discarded
};

// Loads the lattice from `dir` when a valid entry exists, otherwise builds it
// and writes the entry. An empty `dir` disables caching. Writes go through a
// temporary file and a rename, so concurrent writers never expose partial
// entries.
CachedLattice load_or_build_lattice(std::shared_ptr<const FiniteGroup> group,
                                    const std::filesystem::path& dir,
                                    std::size_t subgroup_cap = kDefaultSubgroupCap);

}  // namespace dsg

#endif  // DSG_CACHE_HPP_
