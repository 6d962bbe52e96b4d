// Copyright 2023 The Authors.
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

#ifndef MATKIT_ERRORS_HPP_
#define MATKIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation, e.g. a set over the wrong
// ground set or a rank parameter out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented construction invariant.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive operation was asked to run above its configured size cap.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, std::size_t requested,
                     std::size_t cap)
      : Error(what + " (size " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap) + ")"),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// Malformed text or JSON input. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::string field = {})
      : Error(format_message(what, line, field)), line_(line), field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format_message(const std::string& what, std::size_t line,
                            const std::string& field) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out + what;
  }

  std::size_t line_;
  std::string field_;
};

// Default cap for operations that enumerate 2^n subsets.
inline constexpr std::size_t kDefaultExhaustiveCap = 24;

}  // namespace matkit

#endif  // MATKIT_ERRORS_HPP_
