#pragma once

#include <stdexcept>

namespace coinstack {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid denomination input text.
class ParseError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public ParseError {
public:
    using ParseError::ParseError;
};

class NonPositiveError : public ParseError {
public:
    using ParseError::ParseError;
};

class MalformedError : public ParseError {
public:
    using ParseError::ParseError;
};

class TooLargeError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Requested computation exceeds the configured work bound.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// Exhaustive oracle invoked beyond its enumeration bound.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

/// Frobenius search passed its index bound without a certifying run.
class SearchLimitError : public Error {
public:
    using Error::Error;
};

class UnsupportedIndexError : public Error {
public:
    using Error::Error;
};

class NonUnitConstantTermError : public Error {
public:
    using Error::Error;
};

}  // namespace coinstack
