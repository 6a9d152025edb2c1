#pragma once

#include <stdexcept>
#include <string>

namespace rsdh {

enum class Err {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldMismatch,
    DivisionByZero,
    ZeroElement,
    CharacteristicTwo,
    CharacteristicNotTwo,
    TrivialField,
    DuplicateNode,
    LengthMismatch,
    DegreeOutOfRange,
    TooLarge,
    OutOfRange,
    OutOfTheoremRange,
    DegenerateConstant,
    SearchExhausted,
    ZeroCoefficient,
    Undecidable,
    InconsistencyDetected,
    ParseError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& msg)
        : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

}  // namespace rsdh
