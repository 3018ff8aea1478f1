#pragma once

#include <stdexcept>
#include <string>

namespace afm {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Root bracketing failed: no sign change on the given interval.
class BracketError : public Error {
public:
    explicit BracketError(const std::string& what) : Error(what) {}
};

// No stationary point of the energy inside the search interval.
class ExtremizationError : public Error {
public:
    explicit ExtremizationError(const std::string& what) : Error(what) {}
};

// The requested configuration supports no bound state (e.g. Coulomb
// coupling at or above the critical value).
class NoBoundState : public Error {
public:
    explicit NoBoundState(const std::string& what) : Error(what) {}
};

// Coupling at or above the hard critical limit of the formula itself.
class CriticalExceeded : public Error {
public:
    explicit CriticalExceeded(const std::string& what) : Error(what) {}
};

// Parameter region the theory rejects outright (e.g. power-law
// exponents in (-2,-1)).
class Unphysical : public Error {
public:
    explicit Unphysical(const std::string& what) : Error(what) {}
};

// The whole discrete spectrum is absent (Yukawa with chi < N).
class NoSpectrum : public Error {
public:
    explicit NoSpectrum(const std::string& what) : Error(what) {}
};

// Numerical eigensolver did not converge within its basis budget.
class ConvergenceFailure : public Error {
public:
    explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

} // namespace afm
