// Copyright 2026 The geotele Authors
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

namespace geotele {

/// Caller violated a precondition (bad index, mismatched dimension, bad input file).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Argument lies outside the mathematical domain of a map (e.g. the color-wheel pole).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace geotele
