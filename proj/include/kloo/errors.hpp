/*
   Copyright 2026 the kloo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KLOO_ERRORS_HPP
#define KLOO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kloo {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Enumeration-cap violations. The CLI maps these to exit code 3 and lifts
// them with --force.
class CapError : public Error {
   public:
    using Error::Error;
};

class FieldTooLarge : public CapError {
   public:
    using CapError::CapError;
};

class NotIrreducible : public Error {
   public:
    using Error::Error;
};

class DegreeOutOfRange : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

class ZeroInput : public Error {
   public:
    using Error::Error;
};

class NonDivisorSubfieldDegree : public Error {
   public:
    using Error::Error;
};

class NonDivisorOrder : public Error {
   public:
    using Error::Error;
};

class OddDegree : public Error {
   public:
    using Error::Error;
};

class ZeroCoefficient : public Error {
   public:
    using Error::Error;
};

class DegenerateC : public Error {
   public:
    using Error::Error;
};

class NonIntegralCoefficient : public Error {
   public:
    using Error::Error;
};

class NonIntegralCount : public Error {
   public:
    using Error::Error;
};

}  // namespace kloo

#endif  // KLOO_ERRORS_HPP
