// Copyright 2026 The trinl Authors
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

namespace trinl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A correlator-basis operation was asked of a behavior that signals.
class SignallingInput : public Error {
   public:
    using Error::Error;
};

/// Correlator values that do not describe a valid probability table.
class InvalidCorrelators : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// The floating-point simplex lost too much accuracy; retry in rational mode.
class NumericalBreakdown : public Error {
   public:
    using Error::Error;
};

class CatalogMissing : public Error {
   public:
    using Error::Error;
};

class InvariantViolation : public Error {
   public:
    using Error::Error;
};

/// Malformed file contents or command-line values.
class FormatError : public Error {
   public:
    using Error::Error;
};

}  // namespace trinl
