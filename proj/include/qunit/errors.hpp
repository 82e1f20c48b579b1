// Copyright 2026 The qunit Authors
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

namespace qunit {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch, non-square input, or a matrix that is not Hermitian.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Qubit index out of range or duplicated.
class IndexError : public Error {
   public:
    using Error::Error;
};

/// Iteration caps exceeded or values outside their admissible range.
class NumericError : public Error {
   public:
    using Error::Error;
};

class NotPsdError : public NumericError {
   public:
    NotPsdError(const std::string &what, double eigenvalue) : NumericError(what), eigenvalue_(eigenvalue) {
    }
    double eigenvalue() const {
        return eigenvalue_;
    }

   private:
    double eigenvalue_;
};

class DegenerateInputError : public NumericError {
   public:
    using NumericError::NumericError;
};

class UnsupportedGateError : public Error {
   public:
    using Error::Error;
};

class SizeLimitError : public Error {
   public:
    using Error::Error;
};

/// Expected-value kind does not match the protocol it was dispatched to.
class ContextError : public Error {
   public:
    using Error::Error;
};

/// Malformed suite, sweep, or noise document. The message starts with the
/// location of the offending element.
class ValidationError : public Error {
   public:
    using Error::Error;
};

}  // namespace qunit
