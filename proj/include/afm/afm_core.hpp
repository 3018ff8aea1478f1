#pragma once

// Nonrelativistic auxiliary-field baseline: closed-form spectra of
// p^2/nu + V(r) for power-law and funnel potentials, the generic
// stationary-point engine in the auxiliary field nu, and the lift that
// turns a nu-parameterised spectrum into a semirelativistic one through
// E(nu) = m^2/nu + sigma^2 nu/4 + e(nu).

#include <cmath>
#include <functional>
#include <optional>

#include "afm/errors.hpp"
#include "afm/nmodel.hpp"
#include "afm/roots.hpp"

namespace afm {

// Energy levels of p^2/nu + a sgn(lambda) r^lambda:
//   e = ((2+lambda)/lambda) |a lambda/2|^{2/(lambda+2)} (N^2/nu)^{lambda/(lambda+2)}
inline double nr_powerlaw_energy(double a, double lambda, double nu, double n) {
    if (!(a > 0.0)) throw DomainError("nr_powerlaw_energy: a must be positive");
    if (!(nu > 0.0)) throw DomainError("nr_powerlaw_energy: nu must be positive");
    if (!(n > 0.0)) throw DomainError("nr_powerlaw_energy: N must be positive");
    if (lambda == 0.0 || lambda <= -2.0)
        throw DomainError("nr_powerlaw_energy: lambda must be > -2 and nonzero");
    return (2.0 + lambda) / lambda
           * std::pow(std::abs(a * lambda / 2.0), 2.0 / (lambda + 2.0))
           * std::pow(n * n / nu, lambda / (lambda + 2.0));
}

// Energy levels of p^2/nu + a r - b/r, via the positive root F+ of the
// reduced cubic. The b -> 0 limit is the linear spectrum, taken exactly.
inline double nr_funnel_energy(double a, double b, double nu, double n) {
    if (!(a > 0.0)) throw DomainError("nr_funnel_energy: a must be positive");
    if (!(b >= 0.0)) throw DomainError("nr_funnel_energy: b must be nonnegative");
    if (!(nu > 0.0)) throw DomainError("nr_funnel_energy: nu must be positive");
    if (!(n > 0.0)) throw DomainError("nr_funnel_energy: N must be positive");
    if (b == 0.0) return nr_powerlaw_energy(a, 1.0, nu, n);
    const double y = 3.0 * n * n * std::sqrt(3.0 * a / (nu * nu * b * b * b));
    const double f = roots::cubic_F(roots::SignChoice::plus, y);
    return std::sqrt(3.0 * a * b) * 0.5 * (f - 1.0 / f);
}

struct ExtremizeResult {
    double nu0;
    double energy;
};

namespace detail {

inline double central_difference(const std::function<double(double)>& f,
                                 double x) {
    const double h = std::max(std::abs(x), 1e-30) * 1e-6;
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace detail

// Stationary point of a smooth energy E(nu) with a unique interior minimum
// on the bracket. Localised by golden section, then polished by a root
// solve on the derivative (central difference unless an analytic derivative
// is supplied).
inline ExtremizeResult afm_extremize(
    const std::function<double(double)>& energy, const roots::RootBracket& bracket,
    const std::function<double(double)>& derivative = {}) {
    if (!(bracket.lo < bracket.hi))
        throw ExtremizationError("afm_extremize: invalid bracket");
    const double width = bracket.hi - bracket.lo;
    double nu = roots::golden_minimize(energy, bracket.lo, bracket.hi, 1e-10);
    if (nu - bracket.lo < 1e-6 * width || bracket.hi - nu < 1e-6 * width)
        throw ExtremizationError(
            "afm_extremize: no interior stationary point in bracket");

    auto slope = [&](double x) {
        return derivative ? derivative(x) : detail::central_difference(energy, x);
    };
    // polish: bracket the sign change of E' around the golden-section point
    double lo = nu, hi = nu;
    for (double delta = std::max(1e-9 * std::abs(nu), 1e-12);
         delta < 0.5 * width; delta *= 4.0) {
        lo = std::max(bracket.lo, nu - delta);
        hi = std::min(bracket.hi, nu + delta);
        if (slope(lo) < 0.0 && slope(hi) > 0.0) {
            nu = roots::bracketed_root(slope, {lo, hi, std::abs(nu) * 1e-13});
            break;
        }
    }
    return {nu, energy(nu)};
}

enum class BoundCharacter { upper_witness, exact, unknown };

// A spectrum e(nu) of h(nu) = p^2/nu + V(r), with an optional analytic
// derivative and a tag recording how e relates to the true spectrum of
// h(nu). The tag is what lets the lift certify an upper bound.
struct NuSpectrum {
    std::function<double(double)> value;
    std::function<double(double)> derivative; // empty -> central difference
    BoundCharacter character = BoundCharacter::unknown;
};

enum class BoundKind { upper, unknown };

struct LiftResult {
    double energy;     // E(nu0) = m^2/nu0 + sigma^2 nu0/4 + e(nu0)
    double energy_alt; // sigma^2 nu0/2 + (nu e(nu))' at nu0; agrees to 1e-9
    double nu0;
    BoundKind bound;
};

// Semirelativistic spectrum of sigma sqrt(p^2 + m^2) + V(r) from the
// nonrelativistic-form spectrum e(nu): minimise
//   E(nu) = m^2/nu + sigma^2 nu/4 + e(nu)
// over the auxiliary field nu > 0.
inline LiftResult semirelativistic_lift(const NuSpectrum& e, double sigma,
                                        double mass) {
    if (!(sigma > 0.0)) throw DomainError("semirelativistic_lift: sigma > 0");
    if (!(mass >= 0.0)) throw DomainError("semirelativistic_lift: mass >= 0");

    auto e_prime = [&](double nu) {
        return e.derivative ? e.derivative(nu)
                            : detail::central_difference(e.value, nu);
    };
    // stationarity: sigma^2/4 + e'(nu) - m^2/nu^2 = 0
    auto stationarity = [&](double nu) {
        return sigma * sigma / 4.0 + e_prime(nu) - mass * mass / (nu * nu);
    };

    const double scale = std::max(mass, 1.0);
    const double lo_limit = 1e-8 * scale, hi_limit = 1e8 * scale;
    double lo = 0.0, hi = 0.0;
    double prev_nu = lo_limit, prev_s = stationarity(lo_limit);
    constexpr int kScan = 320;
    for (int i = 1; i <= kScan; ++i) {
        const double nu =
            lo_limit * std::pow(hi_limit / lo_limit, double(i) / kScan);
        const double s = stationarity(nu);
        if (prev_s < 0.0 && s >= 0.0) {
            lo = prev_nu;
            hi = nu;
            break;
        }
        prev_nu = nu;
        prev_s = s;
    }
    if (hi == 0.0)
        throw ExtremizationError(
            "semirelativistic_lift: no stationary auxiliary field in range");
    const double nu0 =
        roots::bracketed_root(stationarity, {lo, hi, 1e-13 * std::abs(hi)});

    const double direct =
        mass * mass / nu0 + sigma * sigma * nu0 / 4.0 + e.value(nu0);
    const double alt =
        sigma * sigma * nu0 / 2.0 + e.value(nu0) + nu0 * e_prime(nu0);
    const BoundKind bound = (e.character == BoundCharacter::unknown)
                                ? BoundKind::unknown
                                : BoundKind::upper;
    return {direct, alt, nu0, bound};
}

// Perturbative mass contribution on top of the ultrarelativistic level:
// Delta(m) = m^2 / nu0_ur, with nu0_ur the massless auxiliary field.
inline double lowmass_shift(double sigma, double mass, double nu0_ur) {
    if (!(sigma > 0.0)) throw DomainError("lowmass_shift: sigma > 0");
    if (!(mass >= 0.0)) throw DomainError("lowmass_shift: mass >= 0");
    if (!(nu0_ur > 0.0)) throw DomainError("lowmass_shift: nu0_ur > 0");
    return mass * mass / nu0_ur;
}

} // namespace afm
