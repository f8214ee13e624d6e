#pragma once

#include <stdexcept>
#include <string>

namespace liouk {

// Base for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation hit a log singularity / zero of the conformal factor.
struct SingularPoint : Error {
    using Error::Error;
};

// A stencil was requested at a non-interior node.
struct BoundaryNode : Error {
    using Error::Error;
};

// A slope fit was requested with too few data points.
struct DegenerateFit : Error {
    using Error::Error;
};

// The truncated ring operator is too far from the identity to invert.
struct NotDiagonallyDominant : Error {
    using Error::Error;
};

// The adaptive ODE integrator underflowed its step size.
struct StepFailure : Error {
    using Error::Error;
};

// Disk grid parameters violate their invariants.
struct InvalidGrid : Error {
    using Error::Error;
};

// A shifted block factorization met a numerically singular pivot.
struct FactorizationSingular : Error {
    using Error::Error;
};

// Both extension attempts (original and perturbed radius) were singular.
struct SingularTruncation : Error {
    using Error::Error;
};

// Command line / configuration error; maps to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

} // namespace liouk
