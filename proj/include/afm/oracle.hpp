#pragma once

// Numerical reference eigensolver for H = sigma sqrt(p^2 + m^2) + V(r) and
// its nonrelativistic-form counterpart h(nu) = p^2/nu + V(r).
//
// The radial sector l is expanded in an oscillator basis of size M with
// length scale b. The p^2 matrix is tridiagonal with exact elements; the
// kinetic square root is obtained by diagonalising that matrix and mapping
// its eigenvalues through sigma sqrt(. + m^2). Potential matrix elements
// use generalized Gauss-Laguerre rules whose weight absorbs the power of r,
// so every pure power-law term integrates exactly; smooth non-polynomial
// factors (Yukawa screening, square-root offset) get extra nodes and are
// handled by the basis-doubling convergence protocol like everything else.

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <numbers>
#include <variant>
#include <vector>

#include "afm/errors.hpp"
#include "afm/nmodel.hpp"
#include "afm/potentials.hpp"

namespace afm::oracle {

struct SemirelativisticKinetic {
    double sigma = 2.0;
    double mass = 0.0;
};

struct NonrelativisticNuKinetic {
    double nu = 1.0;
};

// sqrt(p^2 + m1^2) + sqrt(p^2 + m2^2), for the unequal-mass bound checks
struct TwoBodyKinetic {
    double m1 = 0.0;
    double m2 = 0.0;
};

using Kinetic =
    std::variant<SemirelativisticKinetic, NonrelativisticNuKinetic, TwoBodyKinetic>;

struct HamiltonianSpec {
    Kinetic kinetic;
    PotentialSpec potential;
    int l = 0;
};

struct Options {
    int basis_start = 50;
    int basis_max = 800;
    int tune_basis = 40;      // basis size for the scale search
    double scale = 0.0;       // oscillator length; 0 requests auto-tuning
    int quadrature_extra = 64; // extra nodes for non-polynomial factors
};

struct OracleResult {
    std::vector<double> levels;               // lowest n_max+1 levels
    std::vector<double> convergence_estimate; // |E(M) - E(M/2)| per level
    int basis_size = 0;
    double scale = 0.0;
    bool converged = false;
};

namespace detail {

// Nodes of the generalized Gauss-Laguerre rule for weight t^alpha e^-t
// (eigenvalues of the Jacobi matrix).
inline Eigen::VectorXd gauss_laguerre_nodes(int k, double alpha) {
    Eigen::VectorXd diag(k), sub(k - 1);
    for (int i = 0; i < k; ++i) diag[i] = 2.0 * i + alpha + 1.0;
    for (int i = 1; i < k; ++i) sub[i - 1] = std::sqrt(i * (i + alpha));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

// Orthonormal-polynomial recurrence with dynamic binary rescaling; the raw
// values grow like exp(t/2) and overflow long before the folded quantities
// of interest do, so a power-of-two exponent is tracked on the side.
struct ScaledRecurrence {
    double alpha;
    double t;
    double prev = 0.0;
    double cur;
    long exponent = 0; // value = cur * 2^exponent
    int n = 0;

    ScaledRecurrence(double alpha_, double t_)
        : alpha(alpha_), t(t_), cur(1.0 / std::sqrt(std::tgamma(alpha_ + 1.0))) {}

    void advance() {
        const double an = 2.0 * n + alpha + 1.0;
        const double bn = std::sqrt(n * (n + alpha));
        const double bn1 = std::sqrt((n + 1.0) * (n + 1.0 + alpha));
        const double next = ((t - an) * cur - bn * prev) / bn1;
        prev = cur;
        cur = next;
        ++n;
        const double mag = std::max(std::abs(cur), std::abs(prev));
        if (mag > 1e120) {
            cur *= 0x1p-400;
            prev *= 0x1p-400;
            exponent += 400;
        } else if (mag > 0.0 && mag < 1e-120) {
            cur *= 0x1p+400;
            prev *= 0x1p+400;
            exponent -= 400;
        }
    }
};

// Folded value matrix S(n, j) = p_n^{(alpha_basis)}(t_j) sqrt(w_j) for the
// k-point rule with weight t^alpha_rule e^-t. The weights come from the
// Christoffel function 1/sum_k p_k^2 of the rule's own polynomials, which
// keeps every folded entry O(1) even where weight and polynomial values
// separately span hundreds of orders of magnitude.
inline Eigen::MatrixXd folded_values(int m, double alpha_basis, int k,
                                     double alpha_rule,
                                     Eigen::VectorXd* nodes_out = nullptr) {
    const Eigen::VectorXd nodes = gauss_laguerre_nodes(k, alpha_rule);
    if (nodes_out) *nodes_out = nodes;
    Eigen::MatrixXd s(m, k);
    for (int j = 0; j < k; ++j) {
        const double t = nodes[j];

        // Christoffel sum of the rule's orthonormal polynomials
        ScaledRecurrence rule_rec(alpha_rule, t);
        double w_sum = 0.0;
        long w_exp = 0;
        for (int i = 0; i < k; ++i) {
            if (rule_rec.exponent != w_exp) {
                // bring the running sum to the current scale
                const long shift = rule_rec.exponent - w_exp;
                w_sum *= std::pow(2.0, -2.0 * double(shift));
                w_exp = rule_rec.exponent;
            }
            w_sum += rule_rec.cur * rule_rec.cur;
            if (i + 1 < k) rule_rec.advance();
        }
        // sqrt(w_j) = 2^{-w_exp} / sqrt(w_sum)

        ScaledRecurrence basis_rec(alpha_basis, t);
        for (int n = 0; n < m; ++n) {
            const long diff = basis_rec.exponent - w_exp;
            s(n, j) = basis_rec.cur * std::pow(2.0, double(diff)) / std::sqrt(w_sum);
            if (n + 1 < m) basis_rec.advance();
        }
    }
    return s;
}

// Exact p^2 matrix in the oscillator basis with length b (convention:
// radial functions built on positive-leading-coefficient polynomials).
inline Eigen::MatrixXd p2_matrix(int m, int l, double b) {
    Eigen::MatrixXd p2 = Eigen::MatrixXd::Zero(m, m);
    const double inv_b2 = 1.0 / (b * b);
    for (int k = 0; k < m; ++k) {
        p2(k, k) = (2.0 * k + l + 1.5) * inv_b2;
        if (k + 1 < m) {
            const double off = -std::sqrt((k + 1.0) * (k + l + 1.5)) * inv_b2;
            p2(k, k + 1) = off;
            p2(k + 1, k) = off;
        }
    }
    return p2;
}

struct PotentialTerm {
    double coefficient;
    double exponent;
    std::function<double(double)> radial_extra; // empty -> 1
};

inline std::vector<PotentialTerm> decompose(const PotentialSpec& p) {
    struct Visitor {
        std::vector<PotentialTerm> operator()(const PowerLawPotential& v) const {
            const double sign = v.lambda > 0.0 ? 1.0 : -1.0;
            return {{sign * v.a, v.lambda, {}}};
        }
        std::vector<PotentialTerm> operator()(const FunnelPotential& v) const {
            std::vector<PotentialTerm> t{{v.a, 1.0, {}}};
            if (v.b != 0.0) t.push_back({-v.b, -1.0, {}});
            return t;
        }
        std::vector<PotentialTerm> operator()(const SquareRootPotential& v) const {
            const double a = v.a, b = v.b;
            return {{1.0, 0.0,
                     [a, b](double r) { return std::sqrt(a * a * r * r + b * b); }}};
        }
        std::vector<PotentialTerm> operator()(const YukawaPotential& v) const {
            const double beta = v.beta;
            return {{-v.alpha, -1.0,
                     [beta](double r) { return std::exp(-beta * r); }}};
        }
    };
    return std::visit(Visitor{}, p);
}

inline Eigen::MatrixXd potential_matrix(const PotentialSpec& pot, int m, int l,
                                        double b, int quadrature_extra) {
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(m, m);
    const double alpha_basis = l + 0.5;
    for (const auto& term : decompose(pot)) {
        const double alpha_rule = alpha_basis + 0.5 * term.exponent;
        if (!(alpha_rule > -1.0))
            throw DomainError("oracle: potential too singular for this sector");
        const int k = m + (term.radial_extra ? quadrature_extra : 8);
        Eigen::VectorXd nodes;
        const Eigen::MatrixXd s = folded_values(m, alpha_basis, k, alpha_rule, &nodes);
        Eigen::VectorXd diag(k);
        const double amp = term.coefficient * std::pow(b, term.exponent);
        for (int j = 0; j < k; ++j) {
            double f = amp;
            if (term.radial_extra)
                f *= term.radial_extra(b * std::sqrt(nodes[j]));
            diag[j] = f;
        }
        v.noalias() += s * diag.asDiagonal() * s.transpose();
    }
    return v;
}

inline Eigen::MatrixXd kinetic_matrix(const Kinetic& kin,
                                      const Eigen::MatrixXd& p2) {
    if (const auto* nr = std::get_if<NonrelativisticNuKinetic>(&kin))
        return p2 / nr->nu;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p2);
    const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
    Eigen::VectorXd mapped(lam.size());
    if (const auto* sr = std::get_if<SemirelativisticKinetic>(&kin)) {
        for (int i = 0; i < lam.size(); ++i)
            mapped[i] = sr->sigma * std::sqrt(lam[i] + sr->mass * sr->mass);
    } else {
        const auto& tb = std::get<TwoBodyKinetic>(kin);
        for (int i = 0; i < lam.size(); ++i)
            mapped[i] = std::sqrt(lam[i] + tb.m1 * tb.m1) +
                        std::sqrt(lam[i] + tb.m2 * tb.m2);
    }
    return es.eigenvectors() * mapped.asDiagonal() * es.eigenvectors().transpose();
}

inline void validate_spec(const HamiltonianSpec& h) {
    if (h.l < 0) throw DomainError("oracle: l must be nonnegative");
    validate(h.potential);
    if (const auto* sr = std::get_if<SemirelativisticKinetic>(&h.kinetic)) {
        if (!(sr->sigma > 0.0) || !(sr->mass >= 0.0))
            throw DomainError("oracle: invalid semirelativistic kinematics");
    } else if (const auto* nr = std::get_if<NonrelativisticNuKinetic>(&h.kinetic)) {
        if (!(nr->nu > 0.0)) throw DomainError("oracle: nu must be positive");
    } else {
        const auto& tb = std::get<TwoBodyKinetic>(h.kinetic);
        if (!(tb.m1 >= 0.0) || !(tb.m2 >= 0.0))
            throw DomainError("oracle: masses must be nonnegative");
    }
}

// Relativistic kinematics collapse when a Coulomb-like core reaches the
// critical strength 2 sigma / pi; such sectors have no discrete levels to
// converge to.
inline void check_bound_sector(const HamiltonianSpec& h) {
    double coulomb = 0.0;
    if (const auto* pl = std::get_if<PowerLawPotential>(&h.potential)) {
        if (pl->lambda == -1.0) coulomb = pl->a;
    } else if (const auto* fp = std::get_if<FunnelPotential>(&h.potential)) {
        coulomb = fp->b;
    } else if (const auto* yk = std::get_if<YukawaPotential>(&h.potential)) {
        coulomb = yk->alpha;
    }
    if (coulomb == 0.0) return;
    double sigma_total = 0.0;
    if (const auto* sr = std::get_if<SemirelativisticKinetic>(&h.kinetic))
        sigma_total = sr->sigma;
    else if (std::holds_alternative<TwoBodyKinetic>(h.kinetic))
        sigma_total = 2.0;
    else
        return; // nonrelativistic kinetic tolerates any Coulomb strength
    if (coulomb >= 2.0 * sigma_total / std::numbers::pi)
        throw NoBoundState(
            "oracle: Coulomb-like core at or above the collapse strength "
            "2 sigma / pi; the sector is unbounded from below");
}

struct AssembledProblem {
    Eigen::MatrixXd hamiltonian;
    Eigen::MatrixXd p2;
};

inline AssembledProblem assemble(const HamiltonianSpec& h, int m, double b,
                                 int quadrature_extra) {
    AssembledProblem prob;
    prob.p2 = p2_matrix(m, h.l, b);
    prob.hamiltonian = kinetic_matrix(h.kinetic, prob.p2) +
                       potential_matrix(h.potential, m, h.l, b, quadrature_extra);
    return prob;
}

inline Eigen::VectorXd lowest_levels(const Eigen::MatrixXd& hmat, int count) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hmat,
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues().head(count);
}

// Sum of the lowest levels over a quarter-octave grid of oscillator
// lengths; the grid is anchored at 1 so that exact scale covariances of
// the physics survive discretisation.
inline double tune_scale(const HamiltonianSpec& h, int n_levels,
                         const Options& opt) {
    double best_b = 1.0, best_obj = 0.0;
    bool first = true;
    const int m = std::max(opt.tune_basis, n_levels + 8);
    for (int k = -28; k <= 28; ++k) {
        const double b = std::pow(2.0, k / 4.0);
        const auto prob = assemble(h, m, b, opt.quadrature_extra);
        const double obj = lowest_levels(prob.hamiltonian, n_levels).sum();
        if (first || obj < best_obj) {
            best_b = b;
            best_obj = obj;
            first = false;
        }
    }
    return best_b;
}

struct SolveState {
    OracleResult result;
    Eigen::MatrixXd hamiltonian; // at the final basis size
    Eigen::MatrixXd p2;
};

inline SolveState solve_impl(const HamiltonianSpec& h, int n_max, double tol,
                             const Options& opt) {
    validate_spec(h);
    check_bound_sector(h);
    if (n_max < 0) throw DomainError("oracle: n_max must be nonnegative");
    if (!(tol > 0.0)) throw DomainError("oracle: tolerance must be positive");

    const int n_levels = n_max + 1;
    const double b = opt.scale > 0.0 ? opt.scale : tune_scale(h, n_levels, opt);

    SolveState st;
    st.result.scale = b;
    Eigen::VectorXd prev;
    for (int m = std::max(opt.basis_start, 4 * n_levels); m <= opt.basis_max;
         m *= 2) {
        auto prob = assemble(h, m, b, opt.quadrature_extra);
        const Eigen::VectorXd levels = lowest_levels(prob.hamiltonian, n_levels);
        st.result.basis_size = m;
        if (prev.size() > 0) {
            st.result.convergence_estimate.assign(n_levels, 0.0);
            bool ok = true;
            for (int i = 0; i < n_levels; ++i) {
                const double d = std::abs(levels[i] - prev[i]);
                st.result.convergence_estimate[i] = d;
                if (d > tol * std::max(1.0, std::abs(levels[i]))) ok = false;
            }
            if (ok) {
                st.result.levels.assign(levels.begin(), levels.end());
                st.result.converged = true;
                st.hamiltonian = std::move(prob.hamiltonian);
                st.p2 = std::move(prob.p2);
                return st;
            }
        }
        prev = levels;
        st.result.levels.assign(levels.begin(), levels.end());
        st.hamiltonian = std::move(prob.hamiltonian);
        st.p2 = std::move(prob.p2);
    }
    throw ConvergenceFailure("oracle: basis limit reached before convergence");
}

} // namespace detail

// Lowest n_max+1 levels of the radial sector, converged to tol (absolute
// for levels of order one, relative beyond).
inline OracleResult solve_radial(const HamiltonianSpec& h, int n_max, double tol,
                                 const Options& opt = {}) {
    return detail::solve_impl(h, n_max, tol, opt).result;
}

namespace detail {

inline Eigen::VectorXd eigenvector_for(const SolveState& st, int n) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(st.hamiltonian);
    return es.eigenvectors().col(n);
}

} // namespace detail

// <p^2> in the converged eigenstate (n = state.n, l = state.l).
inline double expectation_p2(const HamiltonianSpec& h, QuantumNumbers state,
                             double tol = 1e-6, const Options& opt = {}) {
    HamiltonianSpec sector = h;
    sector.l = state.l;
    const auto st = detail::solve_impl(sector, state.n, tol, opt);
    const Eigen::VectorXd v = detail::eigenvector_for(st, state.n);
    return v.dot(st.p2 * v);
}

// delta = sigma sqrt(<p^2 + m^2>) - sigma <sqrt(p^2 + m^2)> >= 0; the gap
// between the auxiliary-field kinetic value and the true kinetic mean.
inline double delta_gap(const HamiltonianSpec& h, QuantumNumbers state,
                        double tol = 1e-6, const Options& opt = {}) {
    const auto* sr = std::get_if<SemirelativisticKinetic>(&h.kinetic);
    if (!sr)
        throw DomainError("delta_gap: requires a semirelativistic kinetic term");
    HamiltonianSpec sector = h;
    sector.l = state.l;
    const auto st = detail::solve_impl(sector, state.n, tol, opt);
    const Eigen::VectorXd v = detail::eigenvector_for(st, state.n);
    const double p2_mean = v.dot(st.p2 * v);
    const Eigen::MatrixXd kin = detail::kinetic_matrix(h.kinetic, st.p2);
    const double kinetic_mean = v.dot(kin * v);
    return sr->sigma * std::sqrt(p2_mean + sr->mass * sr->mass) - kinetic_mean;
}

} // namespace afm::oracle
