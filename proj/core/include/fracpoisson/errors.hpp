// Copyright 2026 The fracpoisson Authors.
//
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

#ifndef FRACPOISSON_ERRORS_HPP
#define FRACPOISSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fracpoisson {

// A parameter tuple violates a documented type invariant.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An infinite series hit its term cap (or the top of the precision ladder)
// before the stopping rule was met.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(std::string level, const std::string& what)
      : std::runtime_error(what), level_(std::move(level)) {}

  const std::string& level() const noexcept { return level_; }

 private:
  std::string level_;
};

// Fractional power of a power series whose constant term is not positive.
class ZeroConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A rejection loop or first-passage walk exceeded its safety cap.
class SamplingStall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fractional derivative requested on a grid with too few points.
class GridTooCoarse : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace fracpoisson

#endif  // FRACPOISSON_ERRORS_HPP
