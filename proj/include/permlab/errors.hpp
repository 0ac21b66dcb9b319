#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

enum class ErrorKind {
    RepeatedPoint,
    PointOutOfRange,
    MalformedSyntax,
    DegreeMismatch,
    CapExceeded,
    NotTransitive,
    NotSubgroup,
    DiagonalOrbital,
    NotACongruence,
    NotAMorphism,
    NotAscending,
    LengthMismatch,
    NotLinearOrder,
    ArityMismatch,
    NotAChain,
    AxiomsFailed,
    TooSmall,
    OutOfRange,
    UnknownFixture,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
    throw Error(k, msg);
}

}  // namespace permlab
