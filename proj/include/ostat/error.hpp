#pragma once

#include <stdexcept>
#include <string>

namespace ostat {

// Base for every error raised by the library. The C API maps each subclass
// onto one ost_status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (K <= 1, r > 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A search left the representable range (bracket cap exceeded).
class RangeError : public Error {
public:
    using Error::Error;
};

// A search finished without finding an admissible value.
class NotFoundError : public Error {
public:
    using Error::Error;
};

// Refused because the request would be too expensive (e.g. 2^n enumeration).
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed model specification or report document.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ostat
