#ifndef HVQ_ERRORS_HPP
#define HVQ_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hvq {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller violated a precondition (bad axis, bad argument, mismatched grids).
class UsageError : public Error {
public:
    using Error::Error;
};

// dt exceeded the advective/diffusive CFL bound.
class StabilityError : public Error {
public:
    using Error::Error;
};

// The Hamilton principle function developed non-finite values.
class CausticError : public Error {
public:
    CausticError(const std::string& msg, double t_fail)
        : Error(msg), time_of_failure(t_fail) {}
    double time_of_failure;
};

// Density fell below the node threshold where a Madelung-form quantity is needed.
class NodeError : public Error {
public:
    using Error::Error;
};

// Density went negative after a branch step (dt too large for the lambda term).
class PositivityError : public Error {
public:
    using Error::Error;
};

// <psi, H psi> acquired an imaginary part beyond tolerance.
class HermiticityError : public Error {
public:
    using Error::Error;
};

// Classical Hamiltonian outside the quantizable catalog (e.g. cubic in momentum).
class UnsupportedHamiltonianError : public Error {
public:
    using Error::Error;
};

// Iterative linear solve failed to reach its residual target.
class SolverError : public Error {
public:
    SolverError(const std::string& msg, double res) : Error(msg), residual(res) {}
    double residual;
};

// Interpolation/trajectory query left a dirichlet domain.
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

// Test field unusable (near-zero samples) for a ratio diagnostic.
class DegenerateTestError : public Error {
public:
    using Error::Error;
};

// Pointer packets overlap; outcomes cannot be classified.
class UnresolvableOutcomesError : public Error {
public:
    using Error::Error;
};

// Config text failed validation; carries every error found, not just the first.
class ConfigError : public Error {
public:
    ConfigError(const std::string& msg, std::vector<std::string> errs)
        : Error(msg), errors(std::move(errs)) {}
    std::vector<std::string> errors;
};

} // namespace hvq

#endif
