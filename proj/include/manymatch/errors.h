// Copyright 2026 The manymatch Authors
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

#ifndef MANYMATCH_ERRORS_H_
#define MANYMATCH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace manymatch {

// Malformed arguments: side mismatches, duplicate entries, bad indices.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The instance exceeds a configured search or capacity cap.
class UnsupportedSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold, e.g. deferred
// acceptance on a non-substitutable relation.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoStableMatching : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace manymatch

#endif  // MANYMATCH_ERRORS_H_
