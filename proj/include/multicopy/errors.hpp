// Copyright 2026 The Multicopy Authors
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

#ifndef MULTICOPY_ERRORS_HPP
#define MULTICOPY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multicopy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes or tensor factorizations are incompatible.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operator would exceed the configured maximum matrix side.
class DimensionLimitError : public Error {
 public:
  DimensionLimitError(const std::string &what, std::size_t requested, std::size_t limit)
      : Error(what + ": matrix side " + std::to_string(requested) + " exceeds limit " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// An iterative numerical routine failed to meet its accuracy contract.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace multicopy

#endif  // MULTICOPY_ERRORS_HPP
