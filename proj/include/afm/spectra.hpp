#pragma once

// Closed-form semirelativistic spectra for sigma sqrt(p^2+m^2) + V(r):
// power-law potentials (with the harmonic, linear and Coulomb special
// cases solved through the reduced cubic/quartic roots), the square-root
// potential via its Fourier duality with those cases, the funnel potential
// in its ultrarelativistic, low-mass and general regimes, the Yukawa
// potential through the secondary Lambert branch, plus critical couplings,
// scaling laws and the massless+massive Coulomb two-body case.

#include <cmath>
#include <functional>
#include <algorithm>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "afm/afm_core.hpp"
#include "afm/errors.hpp"
#include "afm/nmodel.hpp"
#include "afm/potentials.hpp"
#include "afm/roots.hpp"

namespace afm {

// A closed-form level together with the auxiliary field and every named
// intermediate of its derivation, so each defining equation can be checked
// independently.
struct AfmResult {
    double energy = 0.0;
    double nu0 = 0.0;
    std::map<std::string, double> internals;
    BoundKind bound = BoundKind::unknown;
};

namespace detail {

inline BoundKind powerlaw_bound(double lambda, NModelKind origin) {
    if (origin == NModelKind::harmonic) return BoundKind::upper;
    if (origin == NModelKind::coulomb_like && lambda == -1.0)
        return BoundKind::upper;
    return BoundKind::unknown;
}

inline double powerlaw_A(double a, double lambda, double n) {
    return std::pow(std::abs(a * lambda / 2.0), 2.0 / (lambda + 2.0))
           * std::pow(n, 2.0 * lambda / (lambda + 2.0));
}

// Physical root of sigma^2/4 x^{lambda+2} - A x - m^2 = 0 by a safeguarded
// bracketed solve; the generic route behind the closed special cases.
inline double powerlaw_elimination_x0(double lambda, double sigma, double m,
                                      double a_coef) {
    auto elim = [&](double x) {
        return sigma * sigma / 4.0 * std::pow(x, lambda + 2.0) - a_coef * x - m * m;
    };
    double hi = std::max(
        std::pow(4.0 * a_coef / (sigma * sigma), 1.0 / (lambda + 1.0)),
        std::pow(4.0 * m * m / (sigma * sigma), 1.0 / (lambda + 2.0)));
    hi = std::max(hi, 1e-30);
    while (elim(hi) <= 0.0) hi *= 2.0;
    return roots::bracketed_root(elim, {0.0, hi, 1e-14 * hi});
}

} // namespace detail

// Critical coupling of the power-law potential for -1 <= lambda < 0: above
// it the closed form turns complex and the state is lost. Independent of m
// only at lambda = -1 where it equals sigma N.
inline double critical_coupling_powerlaw(double lambda, double sigma,
                                         double mass, double n) {
    if (!(lambda >= -1.0 && lambda < 0.0))
        throw DomainError("critical_coupling_powerlaw: lambda must lie in [-1, 0)");
    if (!(sigma > 0.0) || !(n > 0.0))
        throw DomainError("critical_coupling_powerlaw: sigma and N must be positive");
    if (lambda == -1.0) return sigma * n;
    if (!(mass > 0.0))
        throw DomainError("critical_coupling_powerlaw: m must be positive for lambda > -1");
    const double al = std::abs(lambda);
    return sigma * std::pow(n / std::sqrt(al), al)
           * std::pow(mass * mass / (1.0 + lambda), (1.0 + lambda) / 2.0);
}

// Ultrarelativistic (m = 0) power-law spectrum. Returns 0 at lambda = -1
// and negative values for lambda in (-1,0); neither corresponds to a bound
// state (see ur_powerlaw_has_bound_state).
inline double ur_powerlaw_energy(double a, double lambda, double sigma, double n) {
    if (!(a > 0.0)) throw DomainError("ur_powerlaw_energy: a must be positive");
    if (!(sigma > 0.0) || !(n > 0.0))
        throw DomainError("ur_powerlaw_energy: sigma and N must be positive");
    validate_powerlaw_exponent(lambda);
    if (lambda == -1.0) return 0.0;
    return (lambda + 1.0) / lambda
           * std::pow(std::abs(a * lambda), 1.0 / (lambda + 1.0))
           * std::pow(sigma * n, lambda / (lambda + 1.0));
}

inline bool ur_powerlaw_has_bound_state(double lambda) { return lambda > 0.0; }

// Semirelativistic power-law spectrum. Solves the auxiliary-field
// elimination equation sigma^2/4 x^{lambda+2} - A x - m^2 = 0: closed roots
// for lambda in {-1, 1, 2}, a safeguarded bracketed root otherwise.
inline AfmResult sr_powerlaw_energy(const PowerLawPotential& p,
                                    const Kinematics& k, NValue nv) {
    validate(k);
    if (!(p.a > 0.0)) throw DomainError("sr_powerlaw_energy: a must be positive");
    validate_powerlaw_exponent(p.lambda);
    const double a = p.a, lambda = p.lambda, sigma = k.sigma, m = k.mass;
    const double n = nv.value;
    if (!(n > 0.0)) throw DomainError("sr_powerlaw_energy: N must be positive");

    if (lambda == -1.0 && a >= sigma * n)
        throw NoBoundState("sr_powerlaw_energy: Coulomb coupling at or above sigma*N");
    if (lambda < 0.0 && lambda > -1.0) {
        if (m == 0.0)
            throw NoBoundState(
                "sr_powerlaw_energy: no massless bound state for lambda in (-1,0)");
        if (a >= critical_coupling_powerlaw(lambda, sigma, m, n))
            throw NoBoundState("sr_powerlaw_energy: coupling above critical value");
    }

    AfmResult out;
    out.bound = detail::powerlaw_bound(lambda, nv.origin);
    const double A = detail::powerlaw_A(a, lambda, n);
    out.internals["A"] = A;

    if (m == 0.0) {
        const double x0 = std::pow(4.0 * A / (sigma * sigma), 1.0 / (lambda + 1.0));
        out.energy = ur_powerlaw_energy(a, lambda, sigma, n);
        out.nu0 = std::pow(x0, (lambda + 2.0) / 2.0);
        out.internals["x0"] = x0;
        out.internals["E_alt"] = out.energy;
        return out;
    }

    double x0;
    if (lambda == -1.0) {
        x0 = 4.0 * m * m / (sigma * sigma - 4.0 * A);
        out.energy = sigma * m * std::sqrt(1.0 - a * a / (sigma * sigma * n * n));
    } else if (lambda == 1.0) {
        const double y1 = std::pow(3.0, 1.5) * sigma * m * m / (4.0 * std::pow(A, 1.5));
        const double f = roots::cubic_F(roots::SignChoice::minus, y1);
        x0 = 2.0 * std::sqrt(A / (3.0 * sigma * sigma)) * f;
        out.energy = sigma * m / std::sqrt(2.0 * y1 * f) * (3.0 + f * f);
        out.internals["Y1"] = y1;
        out.internals["F"] = f;
    } else if (lambda == 2.0) {
        const double y2 = m * m / 3.0
                          * std::pow(16.0 * sigma / (a * n * n), 2.0 / 3.0);
        const double g = roots::quartic_G(roots::SignChoice::minus, y2);
        x0 = std::pow(2.0 * A / (sigma * sigma), 1.0 / 3.0) * g;
        out.energy = 2.0 * sigma * m / std::sqrt(3.0 * y2) * (g * g + 1.0 / g);
        out.internals["Y2"] = y2;
        out.internals["G"] = g;
    } else {
        x0 = detail::powerlaw_elimination_x0(lambda, sigma, m, A);
        const double nu0 = std::pow(x0, (lambda + 2.0) / 2.0);
        out.energy = 2.0 / lambda
                     * ((lambda + 1.0) * sigma * sigma * nu0 / 4.0 - m * m / nu0);
    }
    out.nu0 = std::pow(x0, (lambda + 2.0) / 2.0);
    out.internals["x0"] = x0;
    // second energy form, kept for consistency checks
    out.internals["E_alt"] = sigma / lambda
                             * (lambda * m * m + (lambda + 1.0) * A * x0)
                             / std::sqrt(m * m + A * x0);
    return out;
}

// Exact ultrarelativistic harmonic levels for l = 0 (sigma = 2), from the
// zeros of Ai.
inline double ur_harmonic_exact(double a, int n) {
    if (!(a > 0.0)) throw DomainError("ur_harmonic_exact: a must be positive");
    return -std::cbrt(4.0 * a) * roots::airy_zero(n);
}

// Nonrelativistic kinematics with V(r) = sqrt(a^2 r^2 + b^2): Fourier-dual
// to the semirelativistic harmonic case with
//   sigma_eff = (4a/m^2)^(1/3), m_eff = b/sigma_eff, a_eff = sigma_eff m a/8.
inline double sqrt_potential_nr_energy(double a, double b, double m_nr, NValue nv) {
    if (!(a > 0.0)) throw DomainError("sqrt_potential_nr_energy: a must be positive");
    if (!(b >= 0.0)) throw DomainError("sqrt_potential_nr_energy: b must be nonnegative");
    if (!(m_nr > 0.0)) throw DomainError("sqrt_potential_nr_energy: mass must be positive");
    const double sigma_eff = std::cbrt(4.0 * a / (m_nr * m_nr));
    const double m_eff = b / sigma_eff;
    const double a_eff = sigma_eff * m_nr * a / 8.0;
    return sr_powerlaw_energy({a_eff, 2.0}, {sigma_eff, m_eff}, nv).energy;
}

// Ultrarelativistic kinematics with the square-root potential: dual to the
// semirelativistic linear case at effective mass b/sigma.
inline double sqrt_potential_ur_energy(double a, double b, double sigma, NValue nv) {
    if (!(a > 0.0)) throw DomainError("sqrt_potential_ur_energy: a must be positive");
    if (!(b >= 0.0)) throw DomainError("sqrt_potential_ur_energy: b must be nonnegative");
    if (!(sigma > 0.0)) throw DomainError("sqrt_potential_ur_energy: sigma must be positive");
    return sr_powerlaw_energy({a, 1.0}, {sigma, b / sigma}, nv).energy;
}

enum class FunnelMode { automatic, ultrarelativistic, lowmass, general };

namespace detail {

// Direct energy in the Y variable, E_f(Y) = m^2 Y/U + sigma^2 U/(4Y)
// + sqrt(3ab) (F+(Y) - 1/F+(Y))/2, minimised over Y when the cubic route
// is unavailable.
inline double funnel_energy_of_Y(double y, double a, double b, double sigma,
                                 double m, double u_cap) {
    const double f = roots::cubic_F(roots::SignChoice::plus, y);
    return m * m * y / u_cap + sigma * sigma * u_cap / (4.0 * y)
           + std::sqrt(3.0 * a * b) * 0.5 * (f - 1.0 / f);
}

// Continue a real cubic root from a nearby starting value. Local Newton is
// immune to the loss of precision the global solver suffers when the
// leading coefficient is many orders below the others (the tracked root is
// moderate; the third root escapes to -c2/c3).
inline double track_cubic_root(double c3, double c2, double c1, double c0,
                               double z_prev) {
    double z = z_prev;
    for (int i = 0; i < 60; ++i) {
        const double f = ((c3 * z + c2) * z + c1) * z + c0;
        const double fp = (3.0 * c3 * z + 2.0 * c2) * z + c1;
        if (fp == 0.0) break;
        const double step = f / fp;
        z -= step;
        if (std::abs(step) <= 1e-14 * (std::abs(z) + 1.0)) return z;
        if (std::abs(z - z_prev) > 0.75 * (std::abs(z_prev) + 1.0)) break;
    }
    // fall back to global enumeration, nearest real root wins
    const auto zs = roots::solve_cubic_real(c3, c2, c1, c0);
    if (zs.empty())
        throw ExtremizationError("track_cubic_root: no real root to continue to");
    double best = zs.front();
    for (double cand : zs)
        if (std::abs(cand - z_prev) < std::abs(best - z_prev)) best = cand;
    return best;
}

} // namespace detail

// Funnel potential a r - b/r with semirelativistic kinematics.
//  - ultrarelativistic: E = 2 sqrt(a (sigma N - b))
//  - lowmass:           E = sqrt((sigma N - b)/a) (2a + sigma m^2/(2N))
//  - general:           cubic in Z0 = c Y0^2, root tracked continuously
//                       from the massless solution
inline AfmResult sr_funnel_energy(const FunnelPotential& fp, const Kinematics& k,
                                  NValue nv, FunnelMode mode = FunnelMode::automatic) {
    validate(k);
    if (!(fp.a > 0.0)) throw DomainError("sr_funnel_energy: a must be positive");
    if (!(fp.b >= 0.0)) throw DomainError("sr_funnel_energy: b must be nonnegative");
    const double a = fp.a, b = fp.b, sigma = k.sigma, m = k.mass;
    const double n = nv.value;
    if (!(n > 0.0)) throw DomainError("sr_funnel_energy: N must be positive");
    if (b >= sigma * n)
        throw NoBoundState("sr_funnel_energy: b >= sigma*N forbids bound states");

    if (b == 0.0 && mode != FunnelMode::lowmass) {
        // pure linear case; the funnel variables degenerate
        AfmResult r = sr_powerlaw_energy({a, 1.0}, k, nv);
        r.internals["D"] = 0.0;
        return r;
    }

    const BoundKind bound = (nv.origin == NModelKind::harmonic)
                                ? BoundKind::upper
                                : BoundKind::unknown;
    const double d_cap = 2.0 * b / (3.0 * sigma * n);
    const double u_cap = (b > 0.0) ? 3.0 * n * n * std::sqrt(3.0 * a / (b * b * b))
                                   : 0.0;

    if (mode == FunnelMode::automatic)
        mode = (m == 0.0) ? FunnelMode::ultrarelativistic : FunnelMode::general;

    AfmResult out;
    out.bound = bound;
    out.internals["D"] = d_cap;
    out.internals["U"] = u_cap;

    if (mode == FunnelMode::ultrarelativistic ||
        (mode == FunnelMode::general && m == 0.0)) {
        const double z_bar = (2.0 - 3.0 * d_cap) / d_cap;
        const double y_bar = std::sqrt(z_bar / (d_cap * d_cap));
        out.energy = 2.0 * std::sqrt(a * (sigma * n - b));
        out.nu0 = u_cap / y_bar;
        out.internals["Z0"] = z_bar;
        out.internals["Y0"] = y_bar;
        out.internals["F"] = d_cap * y_bar;
        out.internals["u"] = 0.0;
        out.internals["c"] = d_cap * d_cap;
        out.internals["d"] = 0.0;
        out.internals["A"] = a * n * n;
        return out;
    }

    if (mode == FunnelMode::lowmass) {
        out.energy = std::sqrt((sigma * n - b) / a)
                     * (2.0 * a + sigma * m * m / (2.0 * n));
        if (b > 0.0) {
            const double z_bar = (2.0 - 3.0 * d_cap) / d_cap;
            const double y_bar = std::sqrt(z_bar / (d_cap * d_cap));
            out.nu0 = u_cap / y_bar; // massless auxiliary field
            out.internals["Y0"] = y_bar;
        } else {
            out.nu0 = sr_powerlaw_energy({a, 1.0}, {sigma, 0.0}, nv).nu0;
        }
        out.internals["eps"] = m * m * b / (a * n * n);
        return out;
    }

    // general case, m > 0
    const double eps = m * m * b / (a * n * n);
    const double cap_a = a * n * n - b * m * m;
    out.internals["eps"] = eps;
    out.internals["A"] = cap_a;

    double y0;
    if (cap_a > 1e-12 * a * n * n) {
        const double u = 2.0 * m / (sigma * u_cap);
        const double c = d_cap * d_cap - 3.0 * u * u;
        const double d = u * u / c;
        out.internals["u"] = u;
        out.internals["c"] = c;
        out.internals["d"] = d;

        // track the root of the Z0 cubic from the massless solution
        double z0 = (2.0 - 3.0 * d_cap) / d_cap;
        constexpr int kSteps = 16;
        for (int j = 1; j <= kSteps; ++j) {
            const double mj = m * double(j) / kSteps;
            const double uj = 2.0 * mj / (sigma * u_cap);
            const double cj = d_cap * d_cap - 3.0 * uj * uj;
            const double dj = uj * uj / cj;
            z0 = detail::track_cubic_root(
                4.0 * dj * dj * dj, d_cap * d_cap - 12.0 * dj * dj,
                6.0 * (d_cap * d_cap + 2.0 * dj), 9.0 * d_cap * d_cap - 4.0, z0);
        }
        if (!(z0 / c > 0.0))
            throw ExtremizationError("sr_funnel_energy: tracked root is inadmissible");
        y0 = std::sqrt(z0 / c);
        out.internals["Z0"] = z0;
        const double f = 2.0 * y0 * (1.0 - d * z0) / (z0 + 3.0);
        out.internals["F"] = f;
        out.energy = m * m * y0 / u_cap + sigma * sigma * u_cap / (4.0 * y0)
                     + std::sqrt(3.0 * a * b) * 0.5 * (f - 1.0 / f);
    } else {
        // beyond the low-mass domain (a N^2 <= b m^2): minimise E_f(Y) directly
        auto e_of_y = [&](double y) {
            return detail::funnel_energy_of_Y(y, a, b, sigma, m, u_cap);
        };
        double best_y = 0.0, best_e = 0.0;
        for (int i = 0; i <= 600; ++i) {
            const double y = 1e-10 * std::pow(1e20, i / 600.0);
            const double e = e_of_y(y);
            if (best_y == 0.0 || e < best_e) {
                best_y = y;
                best_e = e;
            }
        }
        const auto r = afm_extremize(e_of_y, {best_y / 2.0, best_y * 2.0, 1e-13});
        y0 = r.nu0;
        out.energy = r.energy;
    }
    out.internals["Y0"] = y0;
    out.nu0 = u_cap / y0;
    return out;
}

namespace detail {

// Left side of the stationarity condition for the reduced Yukawa problem:
//   1 + W_{-1}(-nu/e) + (N^2/(chi nu g)) sqrt(1 - g^2 nu^2/N^2) = 0
inline double yukawa_stationarity(double nu, double chi, double g, double n) {
    const double arg = std::max(-nu * std::exp(-1.0), -std::exp(-1.0));
    const double w = roots::lambert_w_m1(arg);
    const double rad = std::sqrt(std::max(0.0, 1.0 - g * g * nu * nu / (n * n)));
    return 1.0 + w + n * n / (chi * nu * g) * rad;
}

inline double yukawa_energy_closed(double nu, double chi, double g, double n) {
    const double rad = std::sqrt(std::max(0.0, 1.0 - g * g * nu * nu / (n * n)));
    return (chi * n * n + chi * chi * g * nu * rad)
           / (chi * g * nu + n * n * rad);
}

} // namespace detail

// Reduced Yukawa problem sqrt(q^2 + chi^2) - g e^{-x}/x: auxiliary field
// nu0 in (0, 1] from the transcendental stationarity equation, energy in
// reduced units. g > N exceeds the hard critical limit; g = N returns the
// minimal level E = N at nu0 = 1.
inline AfmResult yukawa_energy_reduced(double chi, double g, double n) {
    if (!(chi > 0.0)) throw DomainError("yukawa_energy_reduced: chi must be positive");
    if (!(g > 0.0)) throw DomainError("yukawa_energy_reduced: g must be positive");
    if (!(n > 0.0)) throw DomainError("yukawa_energy_reduced: N must be positive");
    if (g > n)
        throw CriticalExceeded("yukawa_energy_reduced: g exceeds the limit N");

    AfmResult out;
    out.internals["chi"] = chi;
    out.internals["g"] = g;

    if (g == n) {
        if (n >= chi)
            throw NoBoundState("yukawa_energy_reduced: E = N needs chi > N");
        out.nu0 = 1.0;
        out.energy = n;
        out.internals["W"] = -1.0;
        return out;
    }

    auto t = [&](double nu) { return detail::yukawa_stationarity(nu, chi, g, n); };

    // scan grid: log-spaced in (0,1) plus a geometric approach to nu = 1,
    // where the root sits for weak screening
    std::vector<double> grid;
    for (int i = 0; i <= 240; ++i)
        grid.push_back(1e-12 * std::pow(1e12, i / 241.0));
    for (int k = 1; k <= 12 * 16; ++k)
        grid.push_back(1.0 - std::pow(10.0, -k / 16.0));
    grid.push_back(1.0);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    double best_nu = 0.0, best_e = 0.0;
    double prev_nu = grid.front(), prev_t = t(prev_nu);
    for (size_t i = 1; i < grid.size(); ++i) {
        const double nu = grid[i];
        const double tv = t(nu);
        if ((tv > 0.0) != (prev_t > 0.0)) {
            const double root = roots::bracketed_root(t, {prev_nu, nu, 1e-15});
            const double e = detail::yukawa_energy_closed(root, chi, g, n);
            if (best_nu == 0.0 || e < best_e) {
                best_nu = root;
                best_e = e;
            }
        }
        prev_nu = nu;
        prev_t = tv;
    }
    if (best_nu == 0.0)
        throw NoBoundState("yukawa_energy_reduced: no stationary field in (0,1]");
    if (g * best_nu / n > 1.0 + 1e-12)
        throw NoBoundState("yukawa_energy_reduced: constraint g nu0 <= N violated");
    if (best_e >= chi * (1.0 + 1e-12))
        throw NoBoundState(
            "yukawa_energy_reduced: level sits at or above the dissociation "
            "threshold (g below its critical height)");

    out.nu0 = best_nu;
    out.energy = best_e;
    out.internals["W"] =
        roots::lambert_w_m1(std::max(-best_nu * std::exp(-1.0), -std::exp(-1.0)));
    // variational form of the energy at the stationary point
    out.internals["E_alt"] = chi * std::sqrt(1.0 - g * g * best_nu * best_nu / (n * n))
                             - g * best_nu / out.internals["W"];
    return out;
}

// Physical-units Yukawa level sigma beta E_y(nu0, g) for
// V(r) = -alpha e^{-beta r}/r with kinematics (sigma, m), m > 0.
inline AfmResult yukawa_energy(const YukawaPotential& y, const Kinematics& k,
                               NValue nv) {
    validate(k);
    if (!(y.alpha > 0.0) || !(y.beta > 0.0))
        throw DomainError("yukawa_energy: alpha and beta must be positive");
    if (!(k.mass > 0.0))
        throw DomainError("yukawa_energy: the Yukawa closed form requires m > 0");
    const double chi = k.mass / y.beta;
    const double g = y.alpha / k.sigma;
    AfmResult r = yukawa_energy_reduced(chi, g, nv.value);
    r.internals["Ey"] = r.energy;
    r.energy *= k.sigma * y.beta;
    return r;
}

// Large-chi asymptotic of the reduced Yukawa level.
inline double yukawa_energy_largemass(double chi, double g, double n) {
    if (!(chi > 0.0) || !(g >= 0.0) || !(n > 0.0))
        throw DomainError("yukawa_energy_largemass: invalid arguments");
    const double rad = std::sqrt(std::max(0.0, 1.0 - g * g / (n * n)));
    return g + (chi - n * n / (2.0 * chi)) * rad;
}

// Critical height: the (n,l) level exists once g exceeds
//   g = (N^2/chi) e^{sqrt(1-N^2/chi^2)} / (1 + sqrt(1-N^2/chi^2)).
inline double yukawa_critical_height(double chi, double n) {
    if (!(n > 0.0)) throw DomainError("yukawa_critical_height: N must be positive");
    if (!(chi >= n))
        throw NoSpectrum("yukawa_critical_height: chi < N, the state cannot bind");
    const double s = std::sqrt(std::max(0.0, 1.0 - n * n / (chi * chi)));
    return n * n / chi * std::exp(s) / (1.0 + s);
}

// Critical-height ratio f(y) = g_crit/N as a function of y = N/chi;
// monotone increasing on [0,1] with f(0) = 0 and f(1) = 1.
inline double yukawa_height_ratio(double y) {
    if (!(y >= 0.0 && y <= 1.0))
        throw DomainError("yukawa_height_ratio: y must lie in [0,1]");
    if (y == 0.0) return 0.0;
    const double s = std::sqrt(std::max(0.0, 1.0 - y * y));
    return y * std::exp(s) / (1.0 + s);
}

// Numerical inverse of yukawa_height_ratio on [0,1].
inline double yukawa_height_ratio_inverse(double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw DomainError("yukawa_height_ratio_inverse: ratio must lie in [0,1]");
    if (ratio == 0.0) return 0.0;
    if (ratio == 1.0) return 1.0;
    return roots::bracketed_root(
        [&](double y) { return yukawa_height_ratio(y) - ratio; },
        {0.0, 1.0, 1e-14});
}

// Frame reduction E(m, G, a, sigma) = a sigma E(m/a, G/(a sigma), 1, 1);
// unit_energy solves the (a=1, sigma=1) problem as a function of (m', G').
inline double scaling_reduce(
    const std::function<double(double, double)>& unit_energy, double m, double g,
    double a_scale, double sigma) {
    if (!(a_scale > 0.0) || !(sigma > 0.0))
        throw DomainError("scaling_reduce: scale factors must be positive");
    return a_scale * sigma * unit_energy(m / a_scale, g / (a_scale * sigma));
}

// Power-law refinement: E_lambda(m, G, sigma) =
// (sigma^lambda G)^{1/(lambda+1)} E_lambda(chi, 1, 1) with
// chi = (sigma/G)^{1/(lambda+1)} m.
inline double scaling_reduce_powerlaw(
    const std::function<double(double)>& chi_energy, double m, double g,
    double sigma, double lambda) {
    if (!(g > 0.0) || !(sigma > 0.0))
        throw DomainError("scaling_reduce_powerlaw: G and sigma must be positive");
    const double chi = std::pow(sigma / g, 1.0 / (lambda + 1.0)) * m;
    return std::pow(std::pow(sigma, lambda) * g, 1.0 / (lambda + 1.0))
           * chi_energy(chi);
}

// Ground-type levels of sqrt(p^2) + sqrt(p^2 + m^2) - a/r (one massless
// constituent): E = 2m sqrt( a/(2N) (1 - a/(2N)) ), requiring a < 2N.
inline double unequal_coulomb_massless_energy(double a, double m, double n) {
    if (!(a > 0.0) || !(m >= 0.0) || !(n > 0.0))
        throw DomainError("unequal_coulomb_massless_energy: invalid arguments");
    if (a >= 2.0 * n)
        throw NoBoundState("unequal_coulomb_massless_energy: requires a < 2N");
    const double t = a / (2.0 * n);
    return 2.0 * m * std::sqrt(t * (1.0 - t));
}

// Ritz average: the mixed-mass ground state is bounded below by the mean of
// the two symmetrised ground states.
inline double two_body_average_lower_bound(double e1, double e2) {
    return 0.5 * (e1 + e2);
}

} // namespace afm
