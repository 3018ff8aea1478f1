#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "afm/afm_core.hpp"

using namespace afm;
using Catch::Approx;

namespace {

// Frozen by an independent evaluation of the closed forms (bisection for
// the funnel cubic root).
constexpr double kNrLinear_1_2_15 = 1.965556045656672;   // a=1, nu=2, N=1.5
constexpr double kNrFunnel_1_1_2_15 = 1.117849669421149; // a=b=1, nu=2, N=1.5

NuSpectrum powerlaw_spectrum(double a, double lambda, double n,
                             BoundCharacter tag) {
    NuSpectrum s;
    s.value = [=](double nu) { return nr_powerlaw_energy(a, lambda, nu, n); };
    s.derivative = [=](double nu) {
        return -lambda / (lambda + 2.0) * nr_powerlaw_energy(a, lambda, nu, n) / nu;
    };
    s.character = tag;
    return s;
}

} // namespace

TEST_CASE("n_value for the basic models", "[afm_core]") {
    CHECK(n_value(NModel::harmonic(), {1, 2}) == 5.5);
    CHECK(n_value(NModel::coulomb_like(), {1, 2}) == 4.0);
    CHECK(n_value(NModel::custom(1.5, 1.2, 0.9), {2, 3}) ==
          Approx(1.5 * 2 + 0.9 * 3 + 1.2).epsilon(1e-15));
    CHECK_THROWS_AS(n_value(NModel::harmonic(), {-1, 0}), DomainError);
    CHECK_THROWS_AS(n_value(NModel::custom(-1.0, 0.1, 0.0), {1, 0}), DomainError);
}

TEST_CASE("lambda-fit coefficients hit their exact anchors", "[afm_core]") {
    CHECK(lambda_fit_b(2.0) == Approx(2.0).epsilon(1e-5));
    CHECK(lambda_fit_c(2.0) == Approx(1.5).epsilon(1e-5));
    CHECK(lambda_fit_b(-1.0) == Approx(1.0).epsilon(1e-5));
    CHECK(lambda_fit_c(-1.0) == Approx(1.0).epsilon(1e-5));
    // linear case: N_1 = pi/sqrt(3) n + l + pi sqrt(3)/4
    CHECK(lambda_fit_b(1.0) ==
          Approx(std::numbers::pi / std::numbers::sqrt3).epsilon(1e-12));
    CHECK(n_value(NModel::lambda_fit(1.0), {0, 0}) ==
          Approx(std::numbers::pi * std::numbers::sqrt3 / 4.0).epsilon(1e-12));
}

TEST_CASE("lambda-fit reduces to the exact models at the endpoints", "[afm_core]") {
    for (int n = 0; n <= 5; ++n)
        for (int l = 0; l <= 5; ++l) {
            CHECK(n_value(NModel::lambda_fit(2.0), {n, l}) ==
                  Approx(n_value(NModel::harmonic(), {n, l})).epsilon(1e-12));
            CHECK(n_value(NModel::lambda_fit(-1.0), {n, l}) ==
                  Approx(n_value(NModel::coulomb_like(), {n, l})).epsilon(1e-12));
        }
}

TEST_CASE("lambda-fit range warning", "[afm_core]") {
    CHECK(NModel::lambda_fit(3.0).range_warning().has_value());
    CHECK(NModel::lambda_fit(-1.5).range_warning().has_value());
    CHECK_FALSE(NModel::lambda_fit(1.0).range_warning().has_value());
    CHECK_FALSE(NModel::harmonic().range_warning().has_value());
}

TEST_CASE("nr_powerlaw_energy closed values", "[afm_core]") {
    CHECK(nr_powerlaw_energy(1.0, 2.0, 2.0, 1.5) ==
          Approx(2.0 * std::sqrt(0.5) * 1.5).epsilon(1e-14));
    CHECK(nr_powerlaw_energy(1.0, -1.0, 2.0, 1.0) == Approx(-0.5).epsilon(1e-14));
    CHECK(nr_powerlaw_energy(1.0, 1.0, 2.0, 1.5) ==
          Approx(kNrLinear_1_2_15).epsilon(1e-14));
    CHECK_THROWS_AS(nr_powerlaw_energy(1.0, 0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(nr_powerlaw_energy(1.0, -2.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(nr_powerlaw_energy(-1.0, 1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("nr_powerlaw_energy reproduces the textbook spectra", "[afm_core]") {
    const double a = 1.3, nu = 1.7;
    for (int n = 0; n <= 5; ++n)
        for (int l = 0; l <= 5; ++l) {
            const double nh = n_value(NModel::harmonic(), {n, l});
            CHECK(nr_powerlaw_energy(a, 2.0, nu, nh) ==
                  Approx(2.0 * std::sqrt(a / nu) * nh).epsilon(1e-13));
            const double nc = n_value(NModel::coulomb_like(), {n, l});
            CHECK(nr_powerlaw_energy(a, -1.0, nu, nc) ==
                  Approx(-a * a * nu / (4.0 * nc * nc)).epsilon(1e-13));
        }
}

TEST_CASE("nr_funnel_energy limits and value", "[afm_core]") {
    // b = 0 reduces exactly to the linear spectrum
    CHECK(nr_funnel_energy(1.0, 0.0, 2.0, 1.5) ==
          Approx(kNrLinear_1_2_15).epsilon(1e-14));
    // a -> 0 approaches the pure Coulomb spectrum -nu b^2/(4N^2)
    const double nu = 2.0, b = 1.0, n = 1.0;
    CHECK(nr_funnel_energy(1e-12, b, nu, n) ==
          Approx(-nu * b * b / (4.0 * n * n)).epsilon(1e-8));
    CHECK(nr_funnel_energy(1.0, 1.0, 2.0, 1.5) ==
          Approx(kNrFunnel_1_1_2_15).epsilon(1e-13));
}

TEST_CASE("afm_extremize finds the stationary field", "[afm_core]") {
    // E(nu) = m^2/nu + sigma^2 nu/4 + c with m=1, sigma=2: nu0 = 1, E = 2+c
    const double c = 0.37;
    auto energy = [&](double nu) { return 1.0 / nu + nu + c; };
    const auto r = afm_extremize(energy, {1e-4, 1e4, 1e-12});
    CHECK(r.nu0 == Approx(1.0).epsilon(1e-10));
    CHECK(r.energy == Approx(2.0 + c).epsilon(1e-12));

    CHECK_THROWS_AS(afm_extremize([](double nu) { return nu; }, {1.0, 2.0, 1e-12}),
                    ExtremizationError);
}

TEST_CASE("afm_extremize reproduces the relativistic Coulomb level", "[afm_core]") {
    // sigma=2, m=1, a=1, N=1: E = sigma m sqrt(1 - a^2/(sigma N)^2) = sqrt(3)
    const double sigma = 2.0, m = 1.0, a = 1.0, n = 1.0;
    auto energy = [&](double nu) {
        return m * m / nu + sigma * sigma * nu / 4.0 +
               nr_powerlaw_energy(a, -1.0, nu, n);
    };
    const auto r = afm_extremize(energy, {1e-4, 1e4, 1e-12});
    CHECK(r.energy == Approx(std::sqrt(3.0)).epsilon(1e-10));
    CHECK(r.nu0 == Approx(2.0 / std::sqrt(3.0)).epsilon(1e-8));
}

TEST_CASE("semirelativistic_lift of a constant spectrum", "[afm_core]") {
    const double sigma = 1.7, m = 2.3, c = 0.81;
    NuSpectrum s;
    s.value = [&](double) { return c; };
    s.derivative = [](double) { return 0.0; };
    const auto r = semirelativistic_lift(s, sigma, m);
    CHECK(r.nu0 == Approx(2.0 * m / sigma).epsilon(1e-11));
    CHECK(r.energy == Approx(sigma * m + c).epsilon(1e-12));
    CHECK(r.bound == BoundKind::unknown);
}

TEST_CASE("semirelativistic_lift of the Coulomb spectrum", "[afm_core]") {
    const double sigma = 2.0, m = 1.0, a = 1.0, n = 1.0;
    const double expected = sigma * m * std::sqrt(1.0 - a * a / (sigma * sigma * n * n));

    auto s = powerlaw_spectrum(a, -1.0, n, BoundCharacter::exact);
    auto r = semirelativistic_lift(s, sigma, m);
    CHECK(r.energy == Approx(expected).epsilon(1e-11));
    CHECK(r.bound == BoundKind::upper);

    // same without the analytic derivative
    s.derivative = {};
    r = semirelativistic_lift(s, sigma, m);
    CHECK(r.energy == Approx(expected).epsilon(1e-9));
}

TEST_CASE("semirelativistic_lift massless linear case", "[afm_core]") {
    const auto s = powerlaw_spectrum(1.0, 1.0, 1.5, BoundCharacter::upper_witness);
    const auto r = semirelativistic_lift(s, 2.0, 0.0);
    CHECK(r.energy == Approx(2.0 * std::numbers::sqrt3).epsilon(1e-11));
    CHECK(r.bound == BoundKind::upper);
}

TEST_CASE("lift energy forms agree on random inputs", "[afm_core]") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> usigma(0.5, 3.0), umass(0.1, 5.0),
        ua(0.3, 3.0), un(0.8, 8.0);
    const double lambdas[] = {0.5, 1.0, 2.0};
    for (int i = 0; i < 200; ++i) {
        const double sigma = usigma(rng), m = umass(rng), a = ua(rng), n = un(rng);
        const double lambda = lambdas[i % 3];
        const auto s = powerlaw_spectrum(a, lambda, n, BoundCharacter::unknown);
        const auto r = semirelativistic_lift(s, sigma, m);
        CHECK(std::abs(r.energy - r.energy_alt) <=
              1e-9 * std::max(1.0, std::abs(r.energy)));
    }
}

TEST_CASE("lift approaches the nonrelativistic limit", "[afm_core]") {
    const double sigma = 2.0, a = 1.0, n = 1.5;
    const auto s = powerlaw_spectrum(a, 1.0, n, BoundCharacter::unknown);
    auto diff = [&](double m) {
        const auto r = semirelativistic_lift(s, sigma, m);
        return std::abs(r.energy - sigma * m -
                        nr_powerlaw_energy(a, 1.0, 2.0 * m / sigma, n));
    };
    const double d50 = diff(50.0), d100 = diff(100.0);
    CHECK(d50 <= 10.0 / 50.0);
    CHECK(d100 <= 10.0 / 100.0);
    CHECK(d100 < d50);
}

TEST_CASE("lowmass_shift", "[afm_core]") {
    CHECK(lowmass_shift(2.0, 0.0, 1.3) == 0.0);
    CHECK(lowmass_shift(2.0, 0.1, 0.5) == Approx(0.02).epsilon(1e-15));
    CHECK_THROWS_AS(lowmass_shift(2.0, 0.1, 0.0), DomainError);
}
