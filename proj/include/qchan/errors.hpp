// Copyright 2026 the qchan authors
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

#ifndef QCHAN_ERRORS_HPP_
#define QCHAN_ERRORS_HPP_

#include <stdexcept>

namespace qchan {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Kraus set fails the trace-preservation completeness relation.
struct CompletenessViolation : Error {
  using Error::Error;
};

// A map is not completely positive (its Choi matrix has a negative eigenvalue).
struct NotCompletelyPositive : Error {
  using Error::Error;
};

// A parameter lies outside its documented domain.
struct InvalidParameter : Error {
  using Error::Error;
};

// Incoherent-operation parameters violate their normalization constraints.
struct ConstraintViolation : Error {
  using Error::Error;
};

// Input text is not valid JSON.
struct ParseError : Error {
  using Error::Error;
};

// JSON is well formed but does not match the channel schema.
struct SchemaError : Error {
  using Error::Error;
};

// A parsed object fails semantic validation (e.g. it is not CPTP).
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace qchan

#endif  // QCHAN_ERRORS_HPP_
