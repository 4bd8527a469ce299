#ifndef NECKLACE_ERRORS_HPP
#define NECKLACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace necklace {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInputError : Error {
    using Error::Error;
};

// Root finder (or another iteration) failed to meet its residual target.
struct NumericFailureError : Error {
    double best_residual;
    NumericFailureError(const std::string& msg, double residual)
        : Error(msg), best_residual(residual) {}
};

struct IllConditionedInputError : Error {
    using Error::Error;
};

struct AmbiguousPoleError : Error {
    using Error::Error;
};

struct PathThroughPoleError : Error {
    using Error::Error;
};

struct SingularPointError : Error {
    using Error::Error;
};

struct OutOfGluingRegionError : Error {
    using Error::Error;
};

struct DegenerateConfigurationError : Error {
    using Error::Error;
};

struct LabelingAmbiguityError : Error {
    using Error::Error;
};

struct TrackingError : Error {
    using Error::Error;
};

// Condition m-1 > c_n/|c_{n-1}| failed; carries the smallest admissible m.
struct EmbeddednessConditionError : Error {
    int minimal_admissible_m;
    EmbeddednessConditionError(const std::string& msg, int min_m)
        : Error(msg), minimal_admissible_m(min_m) {}
};

struct CriticalLevelError : Error {
    using Error::Error;
};

struct NoisyJacobianError : Error {
    using Error::Error;
};

struct InvalidActionError : Error {
    using Error::Error;
};

struct PeriodObstructionError : Error {
    using Error::Error;
};

}  // namespace necklace

#endif
