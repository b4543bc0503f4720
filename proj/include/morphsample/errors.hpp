// Copyright 2026 The Morphsample Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MORPHSAMPLE_ERRORS_HPP_
#define MORPHSAMPLE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace morphsample {

// Raised when an operation's stated precondition does not hold, e.g.
// dimension or ceiling mismatch between operands.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised on file system or format failures while reading or writing images.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace morphsample

#endif  // MORPHSAMPLE_ERRORS_HPP_
