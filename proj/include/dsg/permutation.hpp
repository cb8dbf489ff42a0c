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

#ifndef DSG_PERMUTATION_HPP_
#define DSG_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsg {

using Point = std::uint32_t;

// A bijection on {0, ..., degree-1}. Products compose right-to-left:
// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Cycles given as point lists; points must be < degree.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

// Parses "(0 1 2)(3 4)" or "()"; commas inside a cycle are accepted.
// Returns the cycles and the largest point seen (or -1 when none).
struct ParsedCycles {
  std::vector<std::vector<Point>> cycles;
  long max_point = -1;
};
ParsedCycles parse_cycles(std::string_view text);

// One permutation per line in cycle notation; '#' starts a comment. The
// common degree is one more than the largest point mentioned anywhere.
std::vector<Permutation> parse_raw_generators(std::string_view text);

}  // namespace dsg

#endif  // DSG_PERMUTATION_HPP_
