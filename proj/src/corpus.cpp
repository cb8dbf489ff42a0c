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

#include "dsg/corpus.hpp"

#include <cctype>
#include <set>

#include "dsg/error.hpp"
#include "dsg/group.hpp"

namespace dsg {

const char* tier_name(Tier tier) {
  switch (tier) {
    case Tier::kFast:
      return "fast";
    case Tier::kStandard:
      return "standard";
    case Tier::kLong:
      return "long";
  }
  return "?";
}

Tier parse_tier(std::string_view name) {
  if (name == "fast") return Tier::kFast;
  if (name == "standard") return Tier::kStandard;
  if (name == "long") return Tier::kLong;
  throw Error(ErrorCode::kInvalidArgument, "unknown tier '" + std::string(name) + "'");
}

std::uint64_t tier_order_limit(Tier tier) {
  switch (tier) {
    case Tier::kFast:
      return 200;
    case Tier::kStandard:
      return 400;
    case Tier::kLong:
      return UINT64_MAX;
  }
  return 0;
}

std::vector<CorpusEntry> Corpus::tier_entries(Tier tier) const {
  std::vector<CorpusEntry> out;
  for (const auto& e : entries)
    if (e.order <= tier_order_limit(tier)) out.push_back(e);
  return out;
}

const CorpusEntry* Corpus::find(std::string_view label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.')
      return false;
  return true;
}

void collect_action_ids(const GroupSpec& spec, std::vector<std::string>& out) {
  if (spec.kind == Constructor::kSemidirect) out.push_back(spec.action_id);
  for (const auto& op : spec.operands) collect_action_ids(op, out);
}

}  // namespace

Corpus parse_manifest(std::string_view text) {
  Corpus corpus;
  corpus.manifest_hash =
      fnv1a64({reinterpret_cast<const unsigned char*>(text.data()), text.size()});
  std::set<std::string> labels;
  std::size_t line_no = 0;
  std::size_t start = 0;
  struct Pending {
    std::string label;
    std::string spec_text;
    std::size_t line;
  };
  std::vector<Pending> pending;

  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&](const std::string& msg) {
      return Error(ErrorCode::kParse, "manifest line " + std::to_string(line_no) + ": " + msg);
    };
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw where("expected 'label = spec'");
    std::string_view lhs = trim(line.substr(0, eq));
    std::string_view rhs = trim(line.substr(eq + 1));
    if (lhs.starts_with("action ") || lhs.starts_with("action\t")) {
      std::string_view id = trim(lhs.substr(6));
      if (!valid_label(id)) throw where("invalid action id");
      if (corpus.actions.find(std::string(id))) throw where("duplicate action id");
      try {
        corpus.actions.add(std::string(id), parse_action_table(rhs));
      } catch (const ParseError& e) {
        throw where(e.what());
      }
      continue;
    }
    if (!valid_label(lhs)) throw where("invalid label '" + std::string(lhs) + "'");
    if (!labels.insert(std::string(lhs)).second)
      throw where("duplicate label '" + std::string(lhs) + "'");
    if (rhs.empty()) throw where("missing group spec");
    pending.push_back({std::string(lhs), std::string(rhs), line_no});
  }

  for (auto& p : pending) {
    CorpusEntry e;
    e.label = p.label;
    e.line = p.line;
    try {
      e.spec = parse_group_spec(p.spec_text);
    } catch (const Error& err) {
      throw Error(ErrorCode::kParse, "manifest line " + std::to_string(p.line) + ": " + err.what());
    }
    std::vector<std::string> ids;
    collect_action_ids(e.spec, ids);
    for (const auto& id : ids)
      if (!corpus.actions.find(id))
        throw Error(ErrorCode::kParse, "manifest line " + std::to_string(p.line) +
                                           ": unknown action id '" + id + "'");
    e.spec_text = e.spec.to_string();
    e.order = theoretical_order(e.spec);
    if (e.order == 0) {
      RealizeOptions options;
      options.actions = &corpus.actions;
      e.order = realize(e.spec, options)->order();
    }
    corpus.entries.push_back(std::move(e));
  }
  return corpus;
}

const Corpus& default_corpus() {
  static const Corpus corpus = parse_manifest(default_manifest_text());
  return corpus;
}

const ActionRegistry& ActionRegistry::builtin() { return default_corpus().actions; }

}  // namespace dsg
