#pragma once

#include <stdexcept>
#include <string>

namespace bm {

/// Base class for all errors raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotConvex : Error {
    using Error::Error;
};
struct Degenerate : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct SamplingExhausted : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct ZeroColumn : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NoContainingSubtriangle : Error {
    using Error::Error;
};
struct InconsistentRepresentations : Error {
    using Error::Error;
};
struct DegenerateBody : Error {
    using Error::Error;
};
struct NoParallelPair : Error {
    using Error::Error;
};
struct MultiplePairs : Error {
    using Error::Error;
};
struct InclusionFailure : Error {
    using Error::Error;
};
struct CertificationRegression : Error {
    using Error::Error;
};

}  // namespace bm
