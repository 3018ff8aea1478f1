#pragma once

// Root machinery shared by the closed-form spectra: the one-positive-root
// cubic x^3 +- 3x - 2Y and quartic 4x^4 +- 8x - 3Y, the secondary branch of
// the Lambert W function, zeros of the Airy function Ai, and a safeguarded
// bracketed root finder.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "afm/errors.hpp"

namespace afm::roots {

enum class SignChoice { plus, minus };

struct RootBracket {
    double lo = 0.0;
    double hi = 1.0;
    double tolerance = 1e-12; // absolute width at which iteration stops
};

namespace detail {

// Newton polish for p(x) = x^3 + s*3x - 2y, s = +-1. The closed forms lose
// digits to cancellation at both ends of the Y range; a couple of Newton
// steps restore residuals to rounding level.
inline double polish_cubic(double x, double s3, double y) {
    for (int i = 0; i < 3; ++i) {
        const double f = (x * x * x) + s3 * x - 2.0 * y;
        const double fp = 3.0 * x * x + s3;
        if (fp == 0.0) break;
        x -= f / fp;
    }
    return x;
}

inline double polish_quartic(double x, double s8, double y) {
    for (int i = 0; i < 4; ++i) {
        const double f = 4.0 * x * x * x * x + s8 * x - 3.0 * y;
        const double fp = 16.0 * x * x * x + s8;
        if (fp == 0.0) break;
        x -= f / fp;
        if (x < 0.0) x = 0.0;
    }
    return x;
}

} // namespace detail

// Unique positive root of x^3 + 3x - 2Y = 0 (plus) or x^3 - 3x - 2Y = 0
// (minus), Y >= 0. The minus branch switches to the trigonometric form
// below Y = 1 where the radical form turns complex.
inline double cubic_F(SignChoice sign, double y) {
    if (!(y >= 0.0))
        throw DomainError("cubic_F: Y must be nonnegative");
    double x;
    if (y > 1e15) {
        x = std::cbrt(2.0 * y); // avoids Y^2 overflow; polish does the rest
    } else if (sign == SignChoice::plus) {
        const double u = std::cbrt(y + std::sqrt(y * y + 1.0));
        x = u - 1.0 / u;
    } else if (y < 1.0) {
        x = 2.0 * std::cos(std::acos(y) / 3.0);
    } else {
        const double u = std::cbrt(y + std::sqrt(y * y - 1.0));
        x = u + 1.0 / u;
    }
    return detail::polish_cubic(x, sign == SignChoice::plus ? 3.0 : -3.0, y);
}

// Unique nonnegative root of 4x^4 + 8x - 3Y = 0 (plus) or
// 4x^4 - 8x - 3Y = 0 (minus), Y >= 0.
inline double quartic_G(SignChoice sign, double y) {
    if (!(y >= 0.0))
        throw DomainError("quartic_G: Y must be nonnegative");
    double x;
    if (y > 100.0) {
        x = std::pow(0.75 * y, 0.25);
    } else {
        const double w = std::cbrt(2.0 + std::sqrt(4.0 + y * y * y));
        const double v = w - y / w;
        const double inner = 4.0 / std::sqrt(v) - v;
        const double root_v = std::sqrt(v);
        x = (sign == SignChoice::plus)
                ? 0.5 * (std::sqrt(inner) - root_v)
                : 0.5 * (std::sqrt(inner) + root_v);
        if (x < 0.0) x = 0.0;
    }
    return detail::polish_quartic(x, sign == SignChoice::plus ? 8.0 : -8.0, y);
}

// Secondary real branch W_{-1} of w e^w = x on [-1/e, 0). Seeded by the
// branch-point series near -1/e and by the double-log expansion near 0-,
// then refined with Halley iterations.
inline double lambert_w_m1(double x) {
    const double branch = -std::exp(-1.0);
    if (!(x < 0.0) || x < branch * (1.0 + 1e-14))
        throw DomainError("lambert_w_m1: argument must lie in [-1/e, 0)");
    if (x <= branch) return -1.0;

    double w;
    const double q = 1.0 + std::numbers::e * x; // in [0, 1)
    if (q < 0.04) {
        const double p = -std::sqrt(2.0 * q);
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0
                + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
        if (q < 1e-14) return w; // Halley is singular this close to -1/e
    } else {
        const double l1 = std::log(-x);
        const double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1 + l2 * (l2 - 2.0) / (2.0 * l1 * l1);
    }

    for (int i = 0; i < 40; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double fp = ew * (1.0 + w);
        const double denom = fp - f * (2.0 + w) / (2.0 * (1.0 + w));
        if (denom == 0.0) break;
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-15 * std::abs(w)) break;
    }
    return std::min(w, -1.0);
}

namespace detail {

// Ai(x) by its Maclaurin series; adequate for |x| <= 7.
inline double airy_ai_series(double x) {
    constexpr double c1 = 0.35502805388781723926; // Ai(0)
    constexpr double c2 = 0.25881940379280679840; // -Ai'(0)
    const double x3 = x * x * x;
    double f = 1.0, g = x;
    double tf = 1.0, tg = x;
    for (int k = 1; k < 80; ++k) {
        tf *= x3 / ((3.0 * k) * (3.0 * k - 1.0));
        tg *= x3 / ((3.0 * k + 1.0) * (3.0 * k));
        f += tf;
        g += tg;
        if (std::abs(tf) < 1e-18 && std::abs(tg) < 1e-18) break;
    }
    return c1 * f - c2 * g;
}

// Oscillatory asymptotic expansion of Ai(-z) for z >= 7.
inline double airy_ai_asymptotic_negative(double z) {
    const double zeta = (2.0 / 3.0) * z * std::sqrt(z);
    double u = 1.0;
    double p = 0.0, q = 0.0;
    double zeta_pow = 1.0;
    for (int k = 0; k < 26; ++k) {
        const double term = u / zeta_pow;
        if (k % 4 == 0) p += term;
        else if (k % 4 == 1) q += term;
        else if (k % 4 == 2) p -= term;
        else q -= term;
        if (std::abs(term) < 1e-17 && k > 3) break;
        u *= (6.0 * k + 1.0) * (6.0 * k + 3.0) * (6.0 * k + 5.0)
             / (216.0 * (k + 1.0) * (2.0 * k + 1.0));
        zeta_pow *= zeta;
    }
    const double phase = zeta - 0.25 * std::numbers::pi;
    return (std::cos(phase) * p + std::sin(phase) * q)
           / (std::sqrt(std::numbers::pi) * std::pow(z, 0.25));
}

inline double airy_ai(double x) {
    if (x > -7.0) return airy_ai_series(x);
    return airy_ai_asymptotic_negative(-x);
}

} // namespace detail

// Semiclassical estimate of the n-th zero of Ai (n = 0, 1, ...).
inline double airy_zero_wkb(int n) {
    if (n < 0) throw DomainError("airy_zero_wkb: n must be nonnegative");
    const double arg = 1.5 * std::numbers::pi * (n + 0.75);
    return -std::pow(arg, 2.0 / 3.0);
}

// Deterministic bracketed root finder: bisection with a secant candidate
// whenever the candidate stays inside the bracket. Requires a sign change.
inline double bracketed_root(const std::function<double(double)>& f,
                             const RootBracket& bracket) {
    double a = bracket.lo, b = bracket.hi;
    if (!(a < b)) throw BracketError("bracketed_root: lo must be < hi");
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketError("bracketed_root: no sign change on bracket");

    const double tol = bracket.tolerance;
    for (int i = 0; i < 200 && (b - a) > tol; ++i) {
        double mid = 0.5 * (a + b);
        // secant through the current endpoints
        const double denom = fb - fa;
        if (denom != 0.0) {
            const double sec = a - fa * (b - a) / denom;
            const double margin = 0.01 * (b - a);
            if (sec > a + margin && sec < b - margin) mid = sec;
        }
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    return 0.5 * (a + b);
}

// n-th zero of Ai, ordered by increasing magnitude, to ~1e-12 absolute.
inline double airy_zero(int n) {
    if (n < 0) throw DomainError("airy_zero: n must be nonnegative");
    const double seed = airy_zero_wkb(n);
    double width = 0.1;
    for (int attempt = 0; attempt < 6; ++attempt, width *= 2.0) {
        RootBracket br{seed - width, seed + width, 1e-13};
        const double flo = detail::airy_ai(br.lo);
        const double fhi = detail::airy_ai(br.hi);
        if ((flo > 0.0) != (fhi > 0.0))
            return bracketed_root(detail::airy_ai, br);
    }
    throw BracketError("airy_zero: could not bracket the requested zero");
}

// All real roots of c3 x^3 + c2 x^2 + c1 x + c0 = 0, ascending. Degenerate
// leading coefficients fall through to the quadratic/linear cases.
inline std::vector<double> solve_cubic_real(double c3, double c2, double c1,
                                            double c0) {
    std::vector<double> out;
    const double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1),
                                   std::abs(c0)});
    if (scale == 0.0) return out;
    if (std::abs(c3) <= 1e-14 * scale) {
        if (std::abs(c2) <= 1e-14 * scale) {
            if (std::abs(c1) > 0.0) out.push_back(-c0 / c1);
            return out;
        }
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc < 0.0) return out;
        const double s = std::sqrt(disc);
        // stable quadratic formula
        const double qq = -0.5 * (c1 + std::copysign(s, c1));
        out.push_back(qq / c2);
        if (qq != 0.0) out.push_back(c0 / qq);
        else out.push_back(0.0);
        std::sort(out.begin(), out.end());
        return out;
    }

    const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
    const double q = (a * a - 3.0 * b) / 9.0;
    const double r = (2.0 * a * a * a - 9.0 * a * b + 27.0 * c) / 54.0;
    if (r * r < q * q * q) {
        const double theta = std::acos(std::clamp(r / std::sqrt(q * q * q),
                                                  -1.0, 1.0));
        const double m = -2.0 * std::sqrt(q);
        out.push_back(m * std::cos(theta / 3.0) - a / 3.0);
        out.push_back(m * std::cos((theta + 2.0 * std::numbers::pi) / 3.0)
                      - a / 3.0);
        out.push_back(m * std::cos((theta - 2.0 * std::numbers::pi) / 3.0)
                      - a / 3.0);
    } else {
        const double big = -std::copysign(
            std::cbrt(std::abs(r) + std::sqrt(r * r - q * q * q)), r);
        const double small = (big != 0.0) ? q / big : 0.0;
        out.push_back(big + small - a / 3.0);
    }

    for (double& x : out) {
        for (int i = 0; i < 3; ++i) { // polish on the original coefficients
            const double f = ((c3 * x + c2) * x + c1) * x + c0;
            const double fp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
            if (fp == 0.0) break;
            x -= f / fp;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Golden-section minimum of a unimodal function on [lo, hi].
inline double golden_minimize(const std::function<double(double)>& f,
                              double lo, double hi, double rel_tol = 1e-12) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 400; ++i) {
        if ((b - a) <= rel_tol * std::max(1.0, std::abs(a) + std::abs(b)))
            break;
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace afm::roots
