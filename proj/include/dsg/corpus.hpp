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

#ifndef DSG_CORPUS_HPP_
#define DSG_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dsg/group_spec.hpp"

namespace dsg {

enum class Tier { kFast, kStandard, kLong };

const char* tier_name(Tier tier);
Tier parse_tier(std::string_view name);
// Largest group order admitted by a tier (the long tier admits everything).
std::uint64_t tier_order_limit(Tier tier);

struct CorpusEntry {
  std::string label;
  std::string spec_text;  // canonical form
  GroupSpec spec;
  std::uint64_t order = 0;
  std::size_t line = 0;
};

// A parsed manifest. Lines are `label = spec`, `action ID = table`, blank,
// or `#` comments.
struct Corpus {
  std::vector<CorpusEntry> entries;
  ActionRegistry actions;
  std::uint64_t manifest_hash = 0;

  // Entries admitted by `tier`, in manifest order.
  std::vector<CorpusEntry> tier_entries(Tier tier) const;
  const CorpusEntry* find(std::string_view label) const;
};

// Throws ParseError (with the line number in the message) on malformed
// lines, duplicate labels, unknown action ids, or unknown constructors.
Corpus parse_manifest(std::string_view text);

// The manifest shipped with the library.
std::string_view default_manifest_text();
const Corpus& default_corpus();

}  // namespace dsg

#endif  // DSG_CORPUS_HPP_
