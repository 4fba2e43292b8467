// Copyright 2026 The artinstab Authors
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

#ifndef ARTINSTAB_ERROR_HPP_
#define ARTINSTAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artinstab {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph files, unknown generator names, bad subset lists.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (e.g. twisting at a generator
// that is not adjacent to the subset).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Conjugating a subset by a Garside element Delta_V does not produce a set
// of standard generators: some element is adjacent to V without lying in V.
class DeltaActionUndefined : public PreconditionError {
 public:
  DeltaActionUndefined(const std::string& what, std::size_t factor_index)
      : PreconditionError(what), factor_index_(factor_index) {}

  // Index of the failing factor when raised by apply_word, 0 otherwise.
  std::size_t factor_index() const noexcept { return factor_index_; }

 private:
  std::size_t factor_index_;
};

class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

// The Coxeter oracle has no model for this type (H3, H4, non-spherical).
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

}  // namespace artinstab

#endif  // ARTINSTAB_ERROR_HPP_
