// Copyright 2026 The permit-games Authors
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

#ifndef PERMIT_GAMES_ERRORS_HPP
#define PERMIT_GAMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permit_games {

// Malformed dimensions or index mismatches between inputs.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exhaustive enumeration would exceed the configured limit.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace permit_games

#endif  // PERMIT_GAMES_ERRORS_HPP
