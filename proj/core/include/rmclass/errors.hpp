#pragma once

#include <stdexcept>
#include <string>

namespace rmclass {

// Base class for every error raised by the library. Callers that only care
// about "something went wrong" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

class NotAffine : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

// The Burnside sum was not divisible by the group order, which can only
// happen when a cell decomposition is broken.
class InexactDivision : public Error {
public:
    using Error::Error;
};

}  // namespace rmclass
