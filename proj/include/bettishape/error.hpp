// Copyright 2026 The bettishape Authors
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

namespace bettishape {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (JSON, rational literals, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain: bad index range,
/// multiplicity < 2, non-increasing degrees, dimension mismatch, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A vector failed a cone's defining constraints. `constraint()` names the
/// first violated functional, e.g. "chi[0,2]".
class NotInCone : public Error {
 public:
  NotInCone(std::string constraint, const std::string& what)
      : Error(what), constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

/// Something that should be impossible happened (a member with no
/// nonnegative certificate, a failed reconstruction). Always a bug signal.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Desk-scale limit of the polyhedral oracle exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace bettishape
