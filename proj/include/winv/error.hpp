#pragma once

#include <stdexcept>
#include <string>

namespace winv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a recursion was asked to evaluate a key outside its range, or a schedule looped
struct SchedulingError : Error {
    using Error::Error;
};

struct ArithmeticError : Error {
    using Error::Error;
};

// a memo key received two different values
struct CorruptionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace winv
