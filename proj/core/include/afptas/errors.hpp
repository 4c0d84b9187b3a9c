// Copyright 2026 The Afptas Authors
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

#ifndef AFPTAS_ERRORS_HPP
#define AFPTAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace afptas {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidItem : Error {
  using Error::Error;
};

struct InvalidCardinality : Error {
  using Error::Error;
};

struct InvalidEpsilon : Error {
  using Error::Error;
};

// LP degeneracy or factorization breakdown; carries condition diagnostics.
struct NumericalInstability : Error {
  using Error::Error;
};

// Column generation exceeded its iteration cap.
struct ConvergenceFailure : Error {
  using Error::Error;
};

// Exact oracle invoked beyond its size cap.
struct TooLarge : Error {
  using Error::Error;
};

// Bug trap: an invariant the pipeline guarantees was observed violated.
struct InternalInvariantViolation : Error {
  using Error::Error;
};

}  // namespace afptas

#endif  // AFPTAS_ERRORS_HPP
