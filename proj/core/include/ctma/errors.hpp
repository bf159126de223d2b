#ifndef CTMA_ERRORS_HPP
#define CTMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctma {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature failed to converge. Carries the partial value and the
/// estimated error at the point where the integrator gave up.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double partial, double err)
        : Error(what), partial_value(partial), abs_error(err) {}
    double partial_value;
    double abs_error;
};

/// An argument is outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A path does not cover the history window required by a convolution
/// or recovery stencil.
class HorizonError : public Error {
public:
    HorizonError(const std::string& what, double required)
        : Error(what), required_horizon(required) {}
    double required_horizon;
};

/// Closed-form rule and quadrature reached different verdicts.
class VerdictConflictError : public Error {
public:
    explicit VerdictConflictError(const std::string& what) : Error(what) {}
};

/// A run configuration failed validation.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace ctma

#endif
