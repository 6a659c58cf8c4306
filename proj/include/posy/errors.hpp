#pragma once

#include <stdexcept>
#include <string>

namespace posy {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong dimensions, bad numbers, broken invariants of a value type.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A solver reached a negative verdict the caller asked to be treated as failure.
class NegativeVerdict : public Error {
public:
    using Error::Error;
};

class NotColorful : public NegativeVerdict {
public:
    using NegativeVerdict::NegativeVerdict;
};

class NotPointed : public NegativeVerdict {
public:
    using NegativeVerdict::NegativeVerdict;
};

class NotDiscounted : public NegativeVerdict {
public:
    using NegativeVerdict::NegativeVerdict;
};

class InfeasibleRelaxation : public NegativeVerdict {
public:
    using NegativeVerdict::NegativeVerdict;
};

class UnboundedRelaxation : public NegativeVerdict {
public:
    using NegativeVerdict::NegativeVerdict;
};

class NoTangent : public NegativeVerdict {
public:
    NoTangent(std::size_t color, const std::string& what) : NegativeVerdict(what), color_(color) {}
    std::size_t color() const noexcept { return color_; }

private:
    std::size_t color_;
};

class UnsatisfiedAssignment : public NegativeVerdict {
public:
    using NegativeVerdict::NegativeVerdict;
};

/// Line through the origin; the affine normalization <h,x> + 1 = 0 does not exist.
class DegenerateWedge : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

/// Iterative method ran out of iterations.
class MaxIterations : public Error {
public:
    using Error::Error;
};

/// A mathematical guarantee failed to hold; indicates a bug.
class InternalInvariant : public Error {
public:
    using Error::Error;
};

}  // namespace posy
