#ifndef VNERVE_ERROR_HPP
#define VNERVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vnerve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A complex references missing cells or breaks a structural invariant.
struct MalformedComplexError : Error {
    using Error::Error;
};

/// Two complexes do not share a vertex-id namespace with consistent coordinates.
struct IncompatibleSpaceError : Error {
    using Error::Error;
};

/// Input cannot be embedded in the plane (crossing edges, vertex on edge).
struct EmbeddingError : Error {
    using Error::Error;
};

struct NotAVortexError : Error {
    using Error::Error;
};

struct NotANerveError : Error {
    using Error::Error;
};

struct NotPathConnectedError : Error {
    using Error::Error;
};

struct NotAShapeError : Error {
    using Error::Error;
};

struct ProbeError : Error {
    using Error::Error;
};

struct SizeLimitError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

/// File-format violation; message carries the offending element.
struct ParseError : Error {
    using Error::Error;
};

} // namespace vnerve

#endif
