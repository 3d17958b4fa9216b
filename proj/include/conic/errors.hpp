#pragma once

#include <stdexcept>
#include <string>

namespace conic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CONIC_DEFINE_ERROR(Name)                \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

// geometry
CONIC_DEFINE_ERROR(DegenerateInput);
CONIC_DEFINE_ERROR(Unbounded);
CONIC_DEFINE_ERROR(Empty);
CONIC_DEFINE_ERROR(DimensionMismatch);

// face lattice
CONIC_DEFINE_ERROR(InconsistentIncidence);
CONIC_DEFINE_ERROR(VertexNotPresent);
CONIC_DEFINE_ERROR(FaceNotPresent);
CONIC_DEFINE_ERROR(NotComparable);
CONIC_DEFINE_ERROR(NotAConeVertex);
CONIC_DEFINE_ERROR(SizeLimitExceeded);

// invariants
CONIC_DEFINE_ERROR(NotDeltaConic);
CONIC_DEFINE_ERROR(NotCubeConic);
CONIC_DEFINE_ERROR(InconsistentWitness);

// builders
CONIC_DEFINE_ERROR(DimensionOutOfRange);
CONIC_DEFINE_ERROR(SizeMismatch);

// io
CONIC_DEFINE_ERROR(ParseError);

#undef CONIC_DEFINE_ERROR

/// Schema violation in a JSON document; `path()` is a JSON pointer to the offending node.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace conic
