#pragma once

#include <stdexcept>
#include <string>

namespace braid {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};
struct EmptyProduct : Error {
    using Error::Error;
};
struct OutOfUnitaryWindow : Error {
    using Error::Error;
};
struct PhaseError : Error {
    using Error::Error;
};
struct PivotCollision : Error {
    using Error::Error;
};
struct InvalidInvolution : Error {
    using Error::Error;
};
struct ArityError : Error {
    using Error::Error;
};
struct DenseLimitExceeded : Error {
    using Error::Error;
};
struct LevelError : Error {
    using Error::Error;
};
struct PartitionError : Error {
    using Error::Error;
};
struct NormError : Error {
    using Error::Error;
};

// Component amplitude too small for a unitary connector gate.
struct BelowThreshold : Error {
    BelowThreshold(const std::string& what, double alpha_sq)
        : Error(what), alpha_squared(alpha_sq) {}
    double alpha_squared;
};

} // namespace braid
