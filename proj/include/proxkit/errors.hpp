#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace proxkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexError : Error {
    using Error::Error;
};
struct CycleError : Error {
    using Error::Error;
};
struct NoBoundsError : Error {
    using Error::Error;
};
struct NotALatticeError : Error {
    using Error::Error;
};
struct NotDistributiveError : Error {
    NotDistributiveError(const std::string& msg, std::array<int, 3> w)
        : Error(msg), witness(w) {}
    std::array<int, 3> witness;
};
struct AxiomError : Error {
    using Error::Error;
};
struct PreorderError : Error {
    using Error::Error;
};
struct SizeError : Error {
    using Error::Error;
};
struct IsoError : Error {
    using Error::Error;
};
struct NotRIncreasingError : Error {
    using Error::Error;
};
struct HError : Error {
    using Error::Error;
};
struct NotAnEndError : Error {
    using Error::Error;
};
struct NotClopenUpsetError : Error {
    using Error::Error;
};
struct ConditionError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace proxkit
