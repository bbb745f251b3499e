#pragma once

#include <stdexcept>
#include <string>

namespace riskflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfBounds : Error {
    using Error::Error;
};
struct FileFormat : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct EmptyTraining : Error {
    using Error::Error;
};
struct OverlappingSplit : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct DegenerateTarget : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct TooFewSamples : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct UnknownGroup : Error {
    using Error::Error;
};
struct MissingArtifact : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

} // namespace riskflow
