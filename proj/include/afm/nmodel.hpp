#pragma once

// Principal-quantum-number models N(n, l) entering every closed-form
// spectrum. The harmonic and Coulomb-like rules are exact for their parent
// potentials; the lambda-fit rule interpolates power-law exponents in
// [-1, 2]; linear-fit/custom hold externally fitted coefficients.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "afm/errors.hpp"

namespace afm {

struct QuantumNumbers {
    int n = 0; // radial
    int l = 0; // orbital
};

enum class NModelKind { harmonic, coulomb_like, lambda_fit, linear_fit, custom };

// Coefficients of the lambda-fit rule N = b(lambda) n + l + c(lambda),
// rational in lambda with omega = sqrt(3) pi.
inline double lambda_fit_b(double lambda) {
    const double w = std::numbers::sqrt3 * std::numbers::pi;
    return ((4.0 * w - 18.0) * lambda + (18.0 - 2.0 * w))
           / ((3.0 * w - 15.0) * lambda + (21.0 - 3.0 * w));
}

inline double lambda_fit_c(double lambda) {
    const double w = std::numbers::sqrt3 * std::numbers::pi;
    return ((7.0 * w - 36.0) * lambda + (36.0 - 5.0 * w))
           / ((6.0 * w - 32.0) * lambda + (40.0 - 6.0 * w));
}

class NModel {
public:
    static NModel harmonic() { return NModel(NModelKind::harmonic); }
    static NModel coulomb_like() { return NModel(NModelKind::coulomb_like); }
    static NModel lambda_fit(double lambda) {
        NModel m(NModelKind::lambda_fit);
        m.lambda_ = lambda;
        m.b_ = lambda_fit_b(lambda);
        m.c_ = lambda_fit_c(lambda);
        m.d_ = 1.0;
        return m;
    }
    static NModel linear_fit(double b, double c, double d) {
        NModel m(NModelKind::linear_fit);
        m.b_ = b;
        m.c_ = c;
        m.d_ = d;
        return m;
    }
    static NModel custom(double b, double c, double d) {
        NModel m(NModelKind::custom);
        m.b_ = b;
        m.c_ = c;
        m.d_ = d;
        return m;
    }

    NModelKind kind() const { return kind_; }
    double lambda() const { return lambda_; }
    double coefficient_b() const { return b_; }
    double coefficient_c() const { return c_; }
    double coefficient_d() const { return d_; }

    double value(QuantumNumbers q) const {
        if (q.n < 0 || q.l < 0)
            throw DomainError("NModel: quantum numbers must be nonnegative");
        double n = 0.0;
        switch (kind_) {
        case NModelKind::harmonic:
            n = 2.0 * q.n + q.l + 1.5;
            break;
        case NModelKind::coulomb_like:
            n = q.n + q.l + 1.0;
            break;
        case NModelKind::lambda_fit:
        case NModelKind::linear_fit:
        case NModelKind::custom:
            n = b_ * q.n + d_ * q.l + c_;
            break;
        }
        if (!(n > 0.0))
            throw DomainError("NModel: evaluated N(n,l) must be positive");
        return n;
    }

    // The lambda-fit coefficients were validated on lambda in [-1, 2] only.
    std::optional<std::string> range_warning() const {
        if (kind_ == NModelKind::lambda_fit && (lambda_ < -1.0 || lambda_ > 2.0))
            return "lambda-fit N model used outside its validated range [-1, 2]";
        return std::nullopt;
    }

private:
    explicit NModel(NModelKind kind) : kind_(kind) {}

    NModelKind kind_;
    double lambda_ = 0.0;
    double b_ = 0.0, c_ = 0.0, d_ = 0.0;
};

inline double n_value(const NModel& model, QuantumNumbers q) {
    return model.value(q);
}

// An evaluated N together with the model it came from; the origin decides
// whether a closed form inherits an upper-bound guarantee.
struct NValue {
    double value;
    NModelKind origin = NModelKind::custom;

    NValue(double v, NModelKind k) : value(v), origin(k) {}
    NValue(double v) : value(v) {} // plain numbers carry no guarantee
};

inline NValue n_for(const NModel& model, QuantumNumbers q) {
    return NValue(model.value(q), model.kind());
}

} // namespace afm
