#pragma once

#include <stdexcept>

namespace cupid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// image I/O
struct MalformedHeader : Error {
    using Error::Error;
};
struct UnsupportedMaxval : Error {
    using Error::Error;
};
struct TruncatedData : Error {
    using Error::Error;
};

// partitioning
struct EmptyHistogram : Error {
    using Error::Error;
};
struct NZero : Error {
    using Error::Error;
};
struct NTooLarge : Error {
    using Error::Error;
};

// shared
struct DimensionMismatch : Error {
    using Error::Error;
};

// codec
struct FrameTooLarge : Error {
    using Error::Error;
};
struct BadMagic : Error {
    using Error::Error;
};
struct BadVersion : Error {
    using Error::Error;
};
struct InfeasibleSplit : Error {
    using Error::Error;
};
struct TruncatedStream : Error {
    using Error::Error;
};
// header fields out of range, or bytes left over after the last descriptor
struct MalformedStream : Error {
    using Error::Error;
};

}  // namespace cupid
