#include "glinf/diagnostics.hpp"

#include <cmath>
#include <limits>

#include "glinf/errors.hpp"
#include "glinf/kernels.hpp"
#include "glinf/sym_eig.hpp"

namespace glinf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIndicatorTol = 1e-9;

double offdiag_l1(const SymMatrix& a) {
    const int p = a.order();
    double acc = 0.0;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j) acc += std::fabs(a(i, j));
    return acc;
}

double logdet_from(const EigenPair& eg) {
    double acc = 0.0;
    for (double d : eg.values) {
        if (d <= 0.0) throw NotPositiveDefinite("eigenvalue " + std::to_string(d) + " <= 0");
        acc += std::log(d);
    }
    return acc;
}

double objective_from(const ProblemSpec& spec, const SymMatrix& theta, const EigenPair& eg) {
    return -logdet_from(eg) + kernels::dot(spec.s, theta) + spec.gamma * offdiag_l1(theta);
}

double kkt_from(const ProblemSpec& spec, const SymMatrix& theta, const EigenPair& eg,
                double tol) {
    if (tol < 0.0) tol = 1e-7 * std::max(1.0, spec.lambda);
    if (eg.values.front() <= 0.0)
        throw NotPositiveDefinite("kkt_report requires a positive definite theta");
    const SymMatrix inv = apply_spectral(eg, [](double d) { return 1.0 / d; });

    const int p = theta.order();
    double worst = 0.0;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const double g = -inv(i, j) + spec.s(i, j);
            double r;
            if (i == j) {
                r = std::fabs(g);
            } else {
                const double t = theta(i, j);
                const double s = t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
                if (spec.lambda - std::fabs(t) <= tol) {
                    // Active bound: the gradient may only push outward, i.e.
                    // s*(g + gamma*s) <= 0, since the normal cone at the bound
                    // is the nonnegative multiples of s. When lambda itself is
                    // ~0 the interval collapses and any gradient is absorbed.
                    r = s == 0.0 ? 0.0 : std::max(0.0, s * (g + spec.gamma * s));
                } else if (std::fabs(t) <= tol) {
                    r = std::max(0.0, std::fabs(g) - spec.gamma);
                } else {
                    r = std::fabs(g + spec.gamma * s);
                }
            }
            worst = std::max(worst, r);
        }
    }
    return worst;
}

}  // namespace

double objective(const ProblemSpec& spec, const SymMatrix& theta) {
    return objective_from(spec, theta, eig_sym(theta));
}

double aug_lagrangian(const ProblemSpec& spec, const SolverState& state) {
    const double f = objective(spec, state.theta) -
                     spec.gamma * offdiag_l1(state.theta) +
                     spec.gamma * offdiag_l1(state.gamma_mat);

    // Y-block indicators.
    if (kernels::max_abs_offdiag(state.theta_hat) > spec.lambda + kIndicatorTol) return kInf;
    const int p = state.theta_hat.order();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (std::fabs(state.theta_hat(i, j) - state.gamma_hat(i, j)) > kIndicatorTol)
                return kInf;

    const SymMatrix r_theta = kernels::lincomb(1.0, state.theta, -1.0, state.theta_hat);
    const SymMatrix r_gamma = kernels::lincomb(1.0, state.gamma_mat, -1.0, state.gamma_hat);
    const double quad = kernels::dot(r_theta, r_theta) + kernels::dot(r_gamma, r_gamma);
    return f + kernels::dot(state.dual_theta, r_theta) + kernels::dot(state.dual_gamma, r_gamma) +
           0.5 * state.rho * quad;
}

double kkt_report(const ProblemSpec& spec, const SymMatrix& theta, double tol) {
    return kkt_from(spec, theta, eig_sym(theta), tol);
}

Diagnostics compute_diagnostics(const ProblemSpec& spec, const SolverState& state,
                                double dual_change) {
    Diagnostics d;
    d.rho = state.rho;
    d.iter = state.iter;
    d.dual_change = dual_change;
    d.primal_residual = kernels::fro_norm_diff(state.theta, state.theta_hat) +
                        kernels::fro_norm_diff(state.gamma_mat, state.gamma_hat);
    d.constraint_violation =
        std::max(0.0, kernels::max_abs_offdiag(state.theta_hat) - spec.lambda);

    const EigenPair eg = eig_sym(state.theta_hat);
    d.min_eigenvalue = eg.values.front();
    if (d.min_eigenvalue > 0.0) {
        d.objective = objective_from(spec, state.theta_hat, eg);
        d.kkt_stationarity = kkt_from(spec, state.theta_hat, eg, -1.0);
    } else {
        d.objective = kInf;
        d.kkt_stationarity = kInf;
    }
    d.aug_lagrangian = aug_lagrangian(spec, state);
    return d;
}

}  // namespace glinf
