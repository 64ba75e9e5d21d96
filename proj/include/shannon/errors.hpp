#pragma once

#include <stdexcept>
#include <string>

namespace shannon {

// Malformed input: a pmf that does not normalize, a grid that is not
// rectangular, a file whose fields do not parse.  CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation exceeded its tractability bound (e.g. block source too
// large for the exhaustive product pmf).
class ResourceError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// An iterative solver ran out of iterations.  Carries the last duality
// gap so the caller can judge how close it got.  CLI exit code 3.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_gap)
        : std::runtime_error(what), last_gap_(last_gap) {}

    double last_gap() const noexcept { return last_gap_; }

private:
    double last_gap_;
};

}  // namespace shannon
