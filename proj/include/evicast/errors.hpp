#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evicast {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (score strings, evidence files, fixture rows).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structural violation of a mass function, evidence piece or report input.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Two operands refer to different frames of discernment.
class FrameMismatchError : public Error {
public:
    using Error::Error;
};

/// The orthogonal sum is undefined: the normalisation factor 1 - K vanished.
class TotalConflictError : public Error {
public:
    explicit TotalConflictError(const std::string& message, std::size_t fold_step = 0)
        : Error(message), fold_step_(fold_step) {}

    /// Index of the operand that produced total conflict during a fold
    /// (0 for a plain pairwise combination).
    std::size_t fold_step() const { return fold_step_; }

private:
    std::size_t fold_step_ = 0;
};

/// Inconsistent or incomplete inputs to the evaluation tallies.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Unreadable or unwritable files and directories.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace evicast
