#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// a pole of an Appell-Lerch term or of a theta denominator
struct GenericityError : Error {
    using Error::Error;
};

struct OrderExceeded : Error {
    using Error::Error;
};

struct UnsupportedArgument : Error {
    using Error::Error;
};

struct UnsupportedSubstitution : Error {
    using Error::Error;
};

struct UnknownCatalogName : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg), line(line), col(col) {}
    int line;
    int col;
};

} // namespace qseries
