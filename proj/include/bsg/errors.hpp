#pragma once

#include <stdexcept>
#include <string>

namespace bsg {

// Requested oscillator order above the range the recurrence is validated for.
class UnsupportedOrder : public std::domain_error {
public:
    explicit UnsupportedOrder(const std::string& what) : std::domain_error(what) {}
};

// A quadrature rule too small (or too coarse) for the requested integrand.
class QuadratureUnderresolved : public std::invalid_argument {
public:
    explicit QuadratureUnderresolved(const std::string& what) : std::invalid_argument(what) {}
};

// Spectral parameter outside E < 1/2.
class InvalidSpectralParameter : public std::domain_error {
public:
    explicit InvalidSpectralParameter(const std::string& what) : std::domain_error(what) {}
};

// Kernel evaluation on (or too close to) the y-diagonal, where the
// resolvent kernel diverges logarithmically and no tolerance can be certified.
class DiagonalSingularity : public std::domain_error {
public:
    explicit DiagonalSingularity(const std::string& what) : std::domain_error(what) {}
};

class EigensolverFailure : public std::runtime_error {
public:
    explicit EigensolverFailure(const std::string& what) : std::runtime_error(what) {}
};

// An eigenvalue branch never reaches 1/lambda: no bound state on that branch.
class NoBoundState : public std::runtime_error {
public:
    explicit NoBoundState(const std::string& what) : std::runtime_error(what) {}
};

class BracketFailure : public std::runtime_error {
public:
    explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

// CLI / run configuration problems (maps to exit code 2).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace bsg
