// Copyright 2026 The twincsp Authors
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

#ifndef TWINCSP_ERROR_HPP_
#define TWINCSP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace twincsp {

/// Raised when an operation's precondition does not hold (unknown vertex,
/// overlapping vertex sets, order above a configured bound, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a result contradicts a structural theorem the library relies
/// on. Seeing one means a bug, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable input text.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace twincsp

#endif  // TWINCSP_ERROR_HPP_
