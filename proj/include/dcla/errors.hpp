#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcla {

// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ArityMismatch : public Error {
public:
    ArityMismatch(std::size_t a, std::size_t b)
        : Error("indeterminate arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

// Bad input data: malformed datum, spec mismatch, constraint violation.
class ValidationError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ResourceLimitExceeded : public Error {
public:
    using Error::Error;
};

// Something that cannot happen if the implementation is right.
class InternalConsistency : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

class NotFullyFactorable : public Error {
public:
    explicit NotFullyFactorable(std::size_t remainder)
        : Error("polynomial does not split over Q (irreducible remainder of degree " +
                std::to_string(remainder) + ")"),
          remainder_degree(remainder) {}
    std::size_t remainder_degree;
};

class DegreeOverflow : public Error {
public:
    explicit DegreeOverflow(unsigned needed)
        : Error("structure table too small: degree bound " + std::to_string(needed) + " needed"),
          needed_bound(needed) {}
    unsigned needed_bound;
};

}  // namespace dcla
