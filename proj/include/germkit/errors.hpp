#pragma once

#include <stdexcept>
#include <string>

namespace germkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// det M = 0 and the right-hand side is outside the column space.
struct SingularMatrixError : Error {
    using Error::Error;
};

// White part of a graph is not negative definite, so no contraction exists.
struct NotContractibleError : Error {
    using Error::Error;
};

// Malformed graph construction: duplicate ids, loops, multi-edges, bad labels.
struct GraphError : Error {
    using Error::Error;
};

struct UnknownVertexError : GraphError {
    using GraphError::GraphError;
};

struct NotBlackError : Error {
    using Error::Error;
};

// Parameters outside a template's or singularity's admissible range.
struct InvalidParamsError : Error {
    using Error::Error;
};

struct GlueError : Error {
    using Error::Error;
};

struct NotIsomorphicError : GlueError {
    using GlueError::GlueError;
};

struct UnknownComponentError : GlueError {
    using GlueError::GlueError;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& message)
        : Error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

}  // namespace germkit
