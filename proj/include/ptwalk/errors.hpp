// Copyright 2026 The ptwalk Authors
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

#ifndef PTWALK_ERRORS_HPP_
#define PTWALK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ptwalk {

// Bad user input: malformed files, invalid flags, out-of-range parameters.
// CLI maps this family to exit code 1.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Input text that does not parse. Carries a 1-based line number when known.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, int line)
      : UsageError(line > 0 ? "line " + std::to_string(line) + ": " + what
                            : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Violated mathematical precondition: complex spectrum where a real one is
// required, non-diagonalizable operator, indefinite metric, non-convergence.
// CLI maps this family to exit code 2.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling ran out of attempts before an acceptable graph appeared.
class BudgetError : public MathError {
 public:
  BudgetError(const std::string& family, unsigned long long seed,
              int attempts)
      : MathError("generation budget exhausted: family=" + family +
                  " seed=" + std::to_string(seed) +
                  " attempts=" + std::to_string(attempts)),
        family_(family),
        seed_(seed),
        attempts_(attempts) {}
  const std::string& family() const { return family_; }
  unsigned long long seed() const { return seed_; }
  int attempts() const { return attempts_; }

 private:
  std::string family_;
  unsigned long long seed_;
  int attempts_;
};

}  // namespace ptwalk

#endif  // PTWALK_ERRORS_HPP_
