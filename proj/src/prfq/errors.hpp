/*
   Copyright 2026 The prfq Authors

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

#ifndef PRFQ_ERRORS_HPP
#define PRFQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prfq {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Operands live in different fields.
class FieldMismatch : public Error {
   public:
    FieldMismatch() : Error("operands belong to different fields") {}
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

// A mathematical precondition does not hold (zero divisor, pole in F_q, bad subfield, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

// The closed power-sum formula is not applicable; callers fall back to enumeration.
class FormulaOutOfRange : public DomainError {
   public:
    using DomainError::DomainError;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// Missing or corrupt data files.
class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace prfq

#endif
