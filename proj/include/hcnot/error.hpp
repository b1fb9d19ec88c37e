// Copyright 2026 The hcnot Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hcnot {

/// Raised when a caller violates an operation's preconditions (bad indices,
/// non-normalized amplitudes, invalid configuration values, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when GHZ growth hits its attempt cap. Carries a diagnostic message;
/// the trial that triggered it cannot be scored.
class GrowthCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cavity ran out of free qubits and nothing is pending reset.
class PoolExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcnot
