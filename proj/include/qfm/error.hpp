// Copyright 2026 The qfm Authors
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

namespace qfm {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: arity or base-set mismatch, values outside [0,1],
// invalid fuzzy-number parameters.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An exact computation would exceed a configured capacity limit. Engines
// never fall back to approximation.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qfm
