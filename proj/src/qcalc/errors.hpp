// Copyright 2026 The qcalc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

/// Base class of every error raised by the qcalc core. The C API maps each
/// subclass onto one status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A builder was asked for more than its configured level cap allows.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Two vertices are not joined by any edge path.
class Disconnected : public Error {
public:
    using Error::Error;
};

/// A local neighborhood has too few points to determine what was asked.
class Underdetermined : public Error {
public:
    using Error::Error;
};

/// Too few populated distance scales for a fit or decay test.
class Undersampled : public Error {
public:
    using Error::Error;
};

/// A field or path refers to a different set than the one it is used with.
class SetMismatch : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace qcalc
