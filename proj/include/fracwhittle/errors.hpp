#pragma once

#include <stdexcept>
#include <string>

namespace fracwhittle {

/// Bad argument to an operation (non-finite parameter, out-of-range
/// bandwidth, inconsistent estimator configuration, ...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Structurally unusable input data (empty series, non-finite values).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for runtime failures of an estimation step. The Monte Carlo
/// harness records these per replication instead of aborting.
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input carries no usable signal (identically zero / constant series,
/// zero-variance samples).
class DegenerateInput : public EstimationError {
public:
    using EstimationError::EstimationError;
};

/// The objective could not be evaluated anywhere on the search interval.
class EstimationFailed : public EstimationError {
public:
    using EstimationError::EstimationError;
};

/// Monte Carlo run aborted (failure rate above the accepted threshold).
class HarnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fracwhittle
