#pragma once

#include <stdexcept>
#include <string>

namespace gridmatch {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input text problems ---

struct ParseError : Error {
    using Error::Error;
};

struct EmptyInput final : ParseError {
    using ParseError::ParseError;
};

struct RaggedRows final : ParseError {
    using ParseError::ParseError;
};

struct InvalidCharacter final : ParseError {
    using ParseError::ParseError;
};

// --- contract violations ---

struct OutOfBounds final : Error {
    using Error::Error;
};

// Exhaustive graph search refused: node count above the desk-scale guard.
struct TooLarge final : Error {
    using Error::Error;
};

struct AbsentEndpoint final : Error {
    using Error::Error;
};

struct TooManyRuns final : Error {
    using Error::Error;
};

struct KTooLarge final : Error {
    using Error::Error;
};

// A lifted witness took a diagonal step. Valid reduced instances make this
// impossible, so seeing it means a broken invariant, not a user mistake.
struct DiagonalStepFound final : Error {
    using Error::Error;
};

struct InvalidSpec final : Error {
    using Error::Error;
};

struct IoFailure final : Error {
    using Error::Error;
};

}  // namespace gridmatch
