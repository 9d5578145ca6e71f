#pragma once

#include <stdexcept>
#include <string>

namespace uniserial {

// Base for all engine errors so callers can catch everything at once.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic / closed-form domain problems.
struct DomainError : EngineError {
    using EngineError::EngineError;
};

// Coupling (j1,j2,j3) fails the triangle condition where it is required to hold.
struct TriangleViolation : EngineError {
    using EngineError::EngineError;
};

// Too many distinct radicands for the multiquadratic elimination to stay tractable.
struct RadicandExplosion : EngineError {
    using EngineError::EngineError;
};

// A module spec string or parameter set violates its legality constraints.
struct SpecInvalid : EngineError {
    using EngineError::EngineError;
};

// Two modules with different m were combined.
struct MixedM : EngineError {
    using EngineError::EngineError;
};

// Graded socle requested for a tensor whose factors carry no chain bigrading.
struct NotBigraded : EngineError {
    using EngineError::EngineError;
};

// hw decomposition asked for a subspace that is not sl2-invariant.
struct NotInvariant : EngineError {
    using EngineError::EngineError;
};

// An operation needed length-matched inputs (e.g. both factors of length 2).
struct LengthMismatch : EngineError {
    using EngineError::EngineError;
};

// Pair handed to the length-2 socle prediction in the wrong normal order.
struct OrderingViolated : EngineError {
    using EngineError::EngineError;
};

// Factor recovery is not attempted at m = 2.
struct AmbiguousM2 : EngineError {
    using EngineError::EngineError;
};

// No (A2, Am) split of the signature validates.
struct NoCandidate : EngineError {
    using EngineError::EngineError;
};

// More than one split validates; should not happen for m != 2.
struct MultipleCandidates : EngineError {
    using EngineError::EngineError;
};

// Tensor dimension exceeds the configured cap.
struct DimensionCap : EngineError {
    using EngineError::EngineError;
};

} // namespace uniserial
