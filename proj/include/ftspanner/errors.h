// Copyright 2026 The ftspanner Authors.
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

#ifndef FTSPANNER_ERRORS_H_
#define FTSPANNER_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftspanner {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. `line()` is 1-based; 0 means end of input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A precondition on an argument or on graph structure does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine refused an instance larger than its configured cap.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// The round simulator detected a protocol or budget violation, or a
// randomized construction failed after all retries.
class SimulationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ftspanner

#endif  // FTSPANNER_ERRORS_H_
