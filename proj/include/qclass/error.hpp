// Copyright 2026 The qclass Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types shared by the library.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qclass {

/// Base class of every exception thrown by qclass.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad operand, wrong length, bad file).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// Parse failure carrying the 1-based line number of the offending input.
class ParseError : public InvalidArgument {
  public:
    ParseError(std::size_t line, const std::string &what)
        : InvalidArgument("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Well-formed input that violates a domain precondition, e.g. a symmetric
/// inner product run without a sign assumption.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

} // namespace qclass
