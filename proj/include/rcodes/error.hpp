/*
   Copyright 2025 The rcodes authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.

   v1.0
*/

#ifndef RCODES_ERROR_HPP
#define RCODES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rcodes {

/* every domain failure of the library carries one of these kinds */
enum class ErrorKind {
    NotAUnit,
    DivisionByZeroPoly,
    BothZero,
    ZeroPolynomial,
    ConstantPolynomial,
    NotADivisor,
    ZeroCode,
    LengthMismatch,
    MixedModuli,
    BadFactorization,
    EvenLength,
    NonUnitLeadingCoefficient,
    NotRightDivisor,
    OddS,
    NotDualContaining
};

inline const char* error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotAUnit:
            return "NotAUnit";
        case ErrorKind::DivisionByZeroPoly:
            return "DivisionByZeroPoly";
        case ErrorKind::BothZero:
            return "BothZero";
        case ErrorKind::ZeroPolynomial:
            return "ZeroPolynomial";
        case ErrorKind::ConstantPolynomial:
            return "ConstantPolynomial";
        case ErrorKind::NotADivisor:
            return "NotADivisor";
        case ErrorKind::ZeroCode:
            return "ZeroCode";
        case ErrorKind::LengthMismatch:
            return "LengthMismatch";
        case ErrorKind::MixedModuli:
            return "MixedModuli";
        case ErrorKind::BadFactorization:
            return "BadFactorization";
        case ErrorKind::EvenLength:
            return "EvenLength";
        case ErrorKind::NonUnitLeadingCoefficient:
            return "NonUnitLeadingCoefficient";
        case ErrorKind::NotRightDivisor:
            return "NotRightDivisor";
        case ErrorKind::OddS:
            return "OddS";
        case ErrorKind::NotDualContaining:
            return "NotDualContaining";
    }
    return "Unknown";
}

/* domain error: violated precondition of a library operation */
class Error : public std::invalid_argument {
   public:
    Error(ErrorKind kind, const std::string& detail)
        : std::invalid_argument(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }
    const char* name() const noexcept { return error_name(kind_); }

   private:
    ErrorKind kind_;
};

/* malformed textual input (elements, polynomials); the CLI maps it to a usage error */
class ParseError : public std::invalid_argument {
   public:
    explicit ParseError(const std::string& detail) : std::invalid_argument("parse error: " + detail) {}
};

}  // namespace rcodes

#endif
