#pragma once

#include <stdexcept>
#include <string>

namespace heatctrl {

/// Data samples violate a problem compatibility condition (e.g. nonzero
/// initial datum at a homogeneous Dirichlet boundary).
class IncompatibleDataError : public std::invalid_argument {
public:
    explicit IncompatibleDataError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A matrix handed to the CG solver is not usable as an SPD operator
/// (zero or negative diagonal entry).
class IndefiniteMatrixError : public std::runtime_error {
public:
    explicit IndefiniteMatrixError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Non-finite values appeared during iteration (data blowup).
class NumericalFailureError : public std::runtime_error {
public:
    explicit NumericalFailureError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Configuration text could not be parsed or violates an invariant.
/// Carries the 1-based line number when one is known (0 otherwise).
class ConfigError : public std::invalid_argument {
public:
    ConfigError(int line, const std::string& what)
        : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what
                                         : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace heatctrl
