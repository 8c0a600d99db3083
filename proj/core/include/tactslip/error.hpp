// Copyright 2026 The tactslip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TACTSLIP_ERROR_HPP
#define TACTSLIP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tactslip {

// Every failure raised by the library derives from Error. The concrete type
// decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable, missing or malformed files and streams.
class IoError : public Error {
 public:
  using Error::Error;
};

// Caller-supplied arguments that violate a precondition (dimension mismatch,
// bad radius, unknown estimator name, non-monotonic frame index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The first contact of a track is too round or too small to carry an
// orientation. The grasp has to be redone.
class DegenerateContact : public Error {
 public:
  DegenerateContact() : Error("degenerate initial contact") {}
  explicit DegenerateContact(const std::string& detail)
      : Error("degenerate initial contact: " + detail) {}
};

// An invariant inside the library broke (e.g. thinning iteration cap hit).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tactslip

#endif  // TACTSLIP_ERROR_HPP
