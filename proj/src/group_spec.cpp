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

#include "dsg/group_spec.hpp"

#include <cctype>
#include <sstream>

#include "dsg/error.hpp"

namespace dsg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), k);
}

namespace {

struct ConstructorInfo {
  const char* name;
  Constructor kind;
  int int_params;
  int group_operands;
};

constexpr ConstructorInfo kConstructors[] = {
    {"cyclic", Constructor::kCyclic, 1, 0},
    {"dihedral", Constructor::kDihedral, 1, 0},
    {"dicyclic", Constructor::kDicyclic, 1, 0},
    {"symmetric", Constructor::kSymmetric, 1, 0},
    {"alternating", Constructor::kAlternating, 1, 0},
    {"elem_abelian", Constructor::kElemAbelian, 2, 0},
    {"direct", Constructor::kDirect, 0, 2},
    {"semidirect", Constructor::kSemidirect, 0, 2},
    {"psl2", Constructor::kPsl2, 1, 0},
    {"raw", Constructor::kRaw, 0, 0},
};

const ConstructorInfo& info_for(Constructor kind) {
  for (const auto& info : kConstructors)
    if (info.kind == kind) return info;
  throw Error(ErrorCode::kInternal, "unknown constructor");
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters after expression", pos_);
    return spec;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw ParseError("expected identifier", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }
  std::uint32_t integer() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > 0xFFFFFFFFULL) throw ParseError("integer out of range", start);
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected integer", pos_);
    return static_cast<std::uint32_t>(value);
  }

  GroupSpec parse_expr() {
    skip_ws();
    std::size_t name_pos = pos_;
    std::string name = identifier();
    const ConstructorInfo* info = nullptr;
    for (const auto& candidate : kConstructors)
      if (name == candidate.name) info = &candidate;
    if (!info) throw ParseError("unknown group constructor '" + name + "'", name_pos);

    GroupSpec spec;
    spec.kind = info->kind;
    expect('(');
    if (spec.kind == Constructor::kRaw) {
      parse_raw_args(spec);
      return spec;
    }
    std::size_t args_pos = pos_;
    for (int i = 0; i < info->group_operands; ++i) {
      if (i > 0) expect(',');
      spec.operands.push_back(parse_expr());
    }
    for (int i = 0; i < info->int_params; ++i) {
      if (i > 0) expect(',');
      spec.params.push_back(integer());
    }
    if (spec.kind == Constructor::kSemidirect) {
      expect(',');
      spec.action_id = identifier();
    }
    expect(')');
    validate(spec, name, args_pos);
    return spec;
  }

  void parse_raw_args(GroupSpec& spec) {
    std::vector<ParsedCycles> perms;
    long max_point = -1;
    std::size_t start = pos_;
    while (true) {
      skip_ws();
      std::size_t perm_start = pos_;
      int depth = 0;
      while (pos_ < text_.size()) {
        char c = text_[pos_];
        if (c == '(') ++depth;
        if (c == ')') {
          if (depth == 0) break;
          --depth;
        }
        if (c == ',' && depth == 0) break;
        ++pos_;
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated raw(...)", pos_);
      try {
        perms.push_back(parse_cycles(text_.substr(perm_start, pos_ - perm_start)));
      } catch (const ParseError& e) {
        throw ParseError(std::string("raw generator: ") + e.what(), perm_start + e.position());
      }
      max_point = std::max(max_point, perms.back().max_point);
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      ++pos_;  // ','
    }
    if (perms.empty()) throw ParseError("raw group needs generators", start);
    std::size_t degree = static_cast<std::size_t>(std::max(max_point + 1, 1L));
    for (const auto& p : perms) spec.generators.push_back(Permutation::from_cycles(degree, p.cycles));
  }

  static void validate(const GroupSpec& spec, const std::string& name, std::size_t pos) {
    auto domain = [&](const std::string& msg) {
      throw Error(ErrorCode::kDomain,
                  name + ": " + msg + " (at offset " + std::to_string(pos) + ")");
    };
    switch (spec.kind) {
      case Constructor::kCyclic:
      case Constructor::kDihedral:
      case Constructor::kDicyclic:
      case Constructor::kSymmetric:
      case Constructor::kAlternating:
        if (spec.params[0] < 1) domain("n must be at least 1");
        if (spec.params[0] > 4096) domain("n is too large");
        break;
      case Constructor::kElemAbelian:
        if (!is_prime(spec.params[0]))
          domain(std::to_string(spec.params[0]) + " is not a prime");
        if (spec.params[1] < 1) domain("rank must be at least 1");
        if (spec.params[1] > 32) domain("rank is too large");
        break;
      case Constructor::kPsl2: {
        std::uint32_t q = spec.params[0];
        if (!prime_power(q)) domain(std::to_string(q) + " is not a prime power");
        if (q > 13) domain("q must be at most 13");
        break;
      }
      default:
        break;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write_spec(std::ostringstream& out, const GroupSpec& spec) {
  out << info_for(spec.kind).name << '(';
  if (spec.kind == Constructor::kRaw) {
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
      if (i) out << ", ";
      out << spec.generators[i].to_cycle_string();
    }
    out << ')';
    return;
  }
  bool first = true;
  for (const auto& operand : spec.operands) {
    if (!first) out << ", ";
    first = false;
    write_spec(out, operand);
  }
  for (auto p : spec.params) {
    if (!first) out << ",";
    first = false;
    out << p;
  }
  if (spec.kind == Constructor::kSemidirect) out << ", " << spec.action_id;
  out << ')';
}

}  // namespace

std::string GroupSpec::to_string() const {
  std::ostringstream out;
  write_spec(out, *this);
  return out.str();
}

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse_all(); }

ActionTable parse_action_table(std::string_view text) {
  ActionTable table;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> std::int64_t {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) throw ParseError("exponent too large", start);
      ++pos;
    }
    if (start == pos) throw ParseError("expected number", pos);
    return negative ? -v : v;
  };
  auto parse_word = [&]() {
    GeneratorWord word;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("expected generator word", pos);
      if (text[pos] == 'e') {
        ++pos;
      } else if (text[pos] == 'g') {
        ++pos;
        auto gen = number();
        if (gen < 0) throw ParseError("negative generator index", pos);
        std::int64_t exponent = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          exponent = number();
        }
        word.emplace_back(static_cast<std::uint32_t>(gen), static_cast<std::int32_t>(exponent));
      } else {
        throw ParseError("expected 'g<i>' or 'e'", pos);
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      return word;
    }
  };

  table.images.emplace_back();
  while (true) {
    table.images.back().push_back(parse_word());
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == ',') {
      ++pos;
    } else if (text[pos] == ';') {
      ++pos;
      table.images.emplace_back();
    } else {
      throw ParseError("expected ',' or ';' in action table", pos);
    }
  }
  return table;
}

std::string ActionTable::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (k) out << " ; ";
    for (std::size_t n = 0; n < images[k].size(); ++n) {
      if (n) out << ", ";
      const auto& word = images[k][n];
      if (word.empty()) out << 'e';
      for (std::size_t f = 0; f < word.size(); ++f) {
        if (f) out << '*';
        out << 'g' << word[f].first;
        if (word[f].second != 1) out << '^' << word[f].second;
      }
    }
  }
  return out.str();
}

void ActionRegistry::add(const std::string& id, ActionTable table) {
  entries_[id] = std::move(table);
}

const ActionTable* ActionRegistry::find(const std::string& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace dsg
