#pragma once

// Interaction and kinematics descriptors shared by the closed-form spectra
// and the numerical eigensolver.

#include <string>
#include <variant>

#include "afm/errors.hpp"

namespace afm {

// Kinetic prefactor sigma and constituent mass of sigma sqrt(p^2 + m^2).
// sigma = 1 covers one light particle (or one light + one static), sigma = 2
// two equal masses.
struct Kinematics {
    double sigma = 2.0;
    double mass = 0.0;
};

struct PowerLawPotential {
    double a;      // coupling, > 0
    double lambda; // exponent; sign of the potential is sgn(lambda)
};

struct FunnelPotential {
    double a; // linear slope, > 0
    double b; // Coulomb strength, >= 0
};

struct SquareRootPotential {
    double a; // slope of the asymptote, > 0
    double b; // offset, >= 0
};

struct YukawaPotential {
    double alpha; // height, > 0
    double beta;  // screening, > 0
};

using PotentialSpec = std::variant<PowerLawPotential, FunnelPotential,
                                   SquareRootPotential, YukawaPotential>;

inline void validate(const Kinematics& k) {
    if (!(k.sigma > 0.0)) throw DomainError("Kinematics: sigma must be positive");
    if (!(k.mass >= 0.0)) throw DomainError("Kinematics: mass must be nonnegative");
}

inline void validate_powerlaw_exponent(double lambda) {
    if (lambda <= -2.0)
        throw DomainError("power-law exponent must be greater than -2");
    if (lambda > -2.0 && lambda < -1.0)
        throw Unphysical("power-law exponents in (-2,-1) admit no physical solution");
    if (lambda == 0.0)
        throw DomainError("power-law exponent 0 (logarithmic case) is not covered");
}

inline void validate(const PotentialSpec& p) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PowerLawPotential>) {
                if (!(v.a > 0.0)) throw DomainError("PowerLaw: a must be positive");
                validate_powerlaw_exponent(v.lambda);
            } else if constexpr (std::is_same_v<T, FunnelPotential>) {
                if (!(v.a > 0.0)) throw DomainError("Funnel: a must be positive");
                if (!(v.b >= 0.0)) throw DomainError("Funnel: b must be nonnegative");
            } else if constexpr (std::is_same_v<T, SquareRootPotential>) {
                if (!(v.a > 0.0)) throw DomainError("SquareRoot: a must be positive");
                if (!(v.b >= 0.0))
                    throw DomainError("SquareRoot: b must be nonnegative");
            } else {
                if (!(v.alpha > 0.0)) throw DomainError("Yukawa: alpha must be positive");
                if (!(v.beta > 0.0)) throw DomainError("Yukawa: beta must be positive");
            }
        },
        p);
}

inline std::string potential_name(const PotentialSpec& p) {
    struct Namer {
        std::string operator()(const PowerLawPotential&) const { return "powerlaw"; }
        std::string operator()(const FunnelPotential&) const { return "funnel"; }
        std::string operator()(const SquareRootPotential&) const { return "sqrt"; }
        std::string operator()(const YukawaPotential&) const { return "yukawa"; }
    };
    return std::visit(Namer{}, p);
}

} // namespace afm
