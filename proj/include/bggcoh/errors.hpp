#pragma once

#include <stdexcept>
#include <string>

namespace bggcoh {

// Bad caller input (rank mismatch, out-of-range index, unparsable weight).
// The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A complex whose differentials do not compose to zero, or a grid whose
// squares fail to commute.
class MalformedComplex : public InvalidInput {
public:
    explicit MalformedComplex(const std::string& what) : InvalidInput(what) {}
};

// quotient_dim() got a "sub" space that is not contained in "total".
class ContainmentError : public InvalidInput {
public:
    explicit ContainmentError(const std::string& what) : InvalidInput(what) {}
};

// Incompatible matrix shapes.
class DimensionMismatch : public InvalidInput {
public:
    explicit DimensionMismatch(const std::string& what) : InvalidInput(what) {}
};

// Requested multidegree box exceeds the configured hard cap.
class WindowExceeded : public InvalidInput {
public:
    explicit WindowExceeded(const std::string& what) : InvalidInput(what) {}
};

// An identity the engine re-derives internally failed to hold.  Signals a
// bug or a too-small window; the message says which check broke.  The CLI
// maps this to exit code 3.
class MathAssertionError : public std::runtime_error {
public:
    explicit MathAssertionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bggcoh
