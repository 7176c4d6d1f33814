#pragma once

#include <stdexcept>
#include <string>

namespace schwinger {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotUnitaryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonFiniteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// delta-dressed operators are undefined when the dressing mean value vanishes
struct VanishingMeanError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidStateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// phase-space module is restricted to odd dimensions
struct OddDimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateGroundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a cross-checked internal identity failed beyond tolerance
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace schwinger
