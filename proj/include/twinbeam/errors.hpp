#pragma once

#include <stdexcept>
#include <string>

namespace twinbeam {

/// Argument outside its documented domain (bad config value, out-of-range
/// transmission, malformed batch). The CLI maps this family to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Geometry that cannot be conditioned on: singular covariance block or a
/// nonpositive conditioning variance. Also exit code 2; the input is unusable.
class DegenerateInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Base for failures of the measured-variance inversion. Exit code 3.
class InferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The redundant beamsplitter equations disagree in a way no single source
/// explains (e.g. V1+ + V1- = 2 while V1+ V1- != 1).
class InconsistentMeasurementError : public InferenceError {
public:
    using InferenceError::InferenceError;
};

/// Inversion succeeded algebraically but lands outside the physical region
/// (transmission not in (0,1], sub-Heisenberg source variance).
class UnphysicalSourceError : public InferenceError {
public:
    using InferenceError::InferenceError;
};

/// Root search got a bracket whose endpoints do not straddle the root.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Monte-Carlo estimation with fewer samples than the jackknife needs.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace twinbeam
