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

#include "dsg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "dsg/error.hpp"

namespace dsg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw Error(ErrorCode::kDomain, "permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree)
        throw Error(ErrorCode::kDomain, "cycle point " + std::to_string(from) +
                                            " exceeds degree " +
                                            std::to_string(degree));
      if (used[from])
        throw Error(ErrorCode::kDomain, "point " + std::to_string(from) +
                                            " appears in more than one cycle");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> images(b.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

ParsedCycles parse_cycles(std::string_view text) {
  ParsedCycles result;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point index", i);
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > 1'000'000) throw ParseError("point index too large", i);
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
      result.max_point = std::max(result.max_point, static_cast<long>(value));
    }
    if (cycle.size() > 1) result.cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return result;
}

std::vector<Permutation> parse_raw_generators(std::string_view text) {
  std::vector<ParsedCycles> parsed;
  long max_point = -1;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    bool blank = std::all_of(line.begin(), line.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (!blank) {
      try {
        parsed.push_back(parse_cycles(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string("raw generator: ") + e.what(),
                         line_start + e.position());
      }
      max_point = std::max(max_point, parsed.back().max_point);
    }
    line_start = line_end + 1;
  }
  if (parsed.empty()) throw ParseError("raw group has no generators", 0);
  std::size_t degree = static_cast<std::size_t>(std::max(max_point + 1, 1L));
  std::vector<Permutation> gens;
  for (const auto& p : parsed) gens.push_back(Permutation::from_cycles(degree, p.cycles));
  return gens;
}

}  // namespace dsg
