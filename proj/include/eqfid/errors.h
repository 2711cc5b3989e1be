// Copyright 2026 The eqfid Authors
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

#ifndef EQFID_ERRORS_H
#define EQFID_ERRORS_H

#include <stdexcept>
#include <string>

namespace eqfid {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A request exceeds a fixed computational cap (e.g. full 2^N space simulation).
class ResourceError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// An operation was invoked with an incompatible configuration.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace eqfid

#endif
