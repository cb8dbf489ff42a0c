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

#ifndef DSG_ERROR_HPP_
#define DSG_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsg {

// Numeric values are shared with the C API status codes in dsg.h.
enum class ErrorCode : int {
  kParse = 1,
  kDomain = 2,
  kAction = 3,
  kOrderCap = 4,
  kSubgroupCap = 5,
  kNotNormal = 6,
  kBudget = 7,
  kIo = 8,
  kInternal = 9,
  kInvalidArgument = 10,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax error in a group expression, manifest or action table.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::kParse,
              what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An exact search ran out of its node budget. The best value seen so far is
// a valid lower bound; it is never reported as the answer.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::size_t lower_bound)
      : Error(ErrorCode::kBudget, what), lower_bound_(lower_bound) {}

  std::size_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::size_t lower_bound_;
};

}  // namespace dsg

#endif  // DSG_ERROR_HPP_
