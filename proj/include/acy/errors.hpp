#pragma once

#include <stdexcept>
#include <string>

namespace acy {

// Machine-readable failure kinds. Tests match on the code, messages are for humans.
enum class Err {
    NotPrime,
    CharTwoUnsupported,
    BadExtensionDegree,
    NoSuchRoot,
    DivisionByZero,
    FieldMismatch,
    ArityMismatch,
    DegreeOverflow,
    NotDivisible,
    NotSquare,
    NotAlternating,
    OddSize,
    EvenSize,
    SingularMatrix,
    ShapeMismatch,
    RankDeficientLine,
    DegenerateParameter,
    PointNotOnVariety,
    NotSingular,
    TooManyPoints,
    SpanNotStable,
    BadArgument,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace acy
