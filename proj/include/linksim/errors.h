// Copyright 2026 The linksim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINKSIM_ERRORS_H_
#define LINKSIM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linksim {

// Root of every error the library throws. Callers that only need to report
// and exit can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (CSV, JSON lines, YAML).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Data violates a uniqueness or referential constraint: duplicate ids,
// dangling match identifiers, tampered artifacts.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Invalid or inconsistent run configuration, detected before any message
// is sent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DerivationError : public Error {
 public:
  using Error::Error;
};

// A verification was asked to judge cells nobody produced a report for.
class CoverageError : public Error {
 public:
  using Error::Error;
};

}  // namespace linksim

#endif  // LINKSIM_ERRORS_H_
