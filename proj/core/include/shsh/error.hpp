#pragma once

#include <stdexcept>
#include <string>

namespace shsh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed combinatorics: bad ids, mismatched tracks, broken gluings.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Inputs outside an operation's domain (odd spike counts, nonpositive lengths, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Data fails a stated invariant (switch conditions, closure, cone angles).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Weights leave the fixed chart: positivity failure or a needed re-triangulation.
class ChartError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace shsh
