#include "glinf/solver.hpp"

#include <cmath>

#include "glinf/diagnostics.hpp"
#include "glinf/errors.hpp"
#include "glinf/kernels.hpp"
#include "glinf/prox_ops.hpp"

namespace glinf {

double rho_at(const SolverConfig& config, int iter) {
    return std::ldexp(config.rho0, iter / config.doubling_interval);
}

SolverState initial_state(const ProblemSpec& spec, const SolverConfig& config) {
    const int p = spec.order();
    SolverState s;
    s.theta = s.gamma_mat = s.theta_hat = s.gamma_hat = SymMatrix::identity(p);
    s.dual_theta = s.dual_gamma = SymMatrix(p);
    s.rho = config.rho0;
    s.iter = 0;
    return s;
}

SolverState x_step(SolverState state, const ProblemSpec& spec) {
    const double inv_rho = 1.0 / state.rho;
    const SymMatrix shifted = kernels::lincomb(1.0, state.theta_hat, -inv_rho, spec.s);
    state.theta = expand(kernels::lincomb(1.0, shifted, -inv_rho, state.dual_theta), state.rho);
    state.gamma_mat = soft_threshold_offdiag(
        kernels::lincomb(1.0, state.gamma_hat, -inv_rho, state.dual_gamma),
        spec.gamma * inv_rho);
    return state;
}

SolverState y_step(SolverState state, const ProblemSpec& spec) {
    const double half_inv_rho = 0.5 / state.rho;
    const SymMatrix avg = kernels::lincomb4(0.5, state.theta, 0.5, state.gamma_mat, half_inv_rho,
                                            state.dual_theta, half_inv_rho, state.dual_gamma);
    state.theta_hat = clip_offdiag(avg, spec.lambda);
    state.gamma_hat = state.theta_hat;
    return state;
}

SolverState dual_step(SolverState state) {
    // Residual-form ascent: an exactly zero residual leaves the multiplier
    // bitwise unchanged.
    const SymMatrix r_theta = kernels::lincomb(1.0, state.theta, -1.0, state.theta_hat);
    const SymMatrix r_gamma = kernels::lincomb(1.0, state.gamma_mat, -1.0, state.gamma_hat);
    state.dual_theta = kernels::lincomb(1.0, state.dual_theta, state.rho, r_theta);
    state.dual_gamma = kernels::lincomb(1.0, state.dual_gamma, state.rho, r_gamma);
    ++state.iter;
    return state;
}

SolverState iterate(SolverState state, const ProblemSpec& spec) {
    return dual_step(y_step(x_step(std::move(state), spec), spec));
}

namespace {

bool state_finite(const SolverState& s) {
    return s.theta.all_finite() && s.gamma_mat.all_finite() && s.theta_hat.all_finite() &&
           s.gamma_hat.all_finite() && s.dual_theta.all_finite() && s.dual_gamma.all_finite();
}

}  // namespace

SolveResult solve(const ProblemSpec& spec, const SolverConfig& config,
                  const SymMatrix* warm_start) {
    config.validate();

    SolverState state = initial_state(spec, config);
    if (warm_start) {
        if (warm_start->order() != spec.order())
            throw DimensionError("warm start order does not match problem order");
        state.theta = state.gamma_mat = state.theta_hat = state.gamma_hat = *warm_start;
    }

    SolveResult result;
    if (config.trace) result.trace.emplace();

    Termination termination = Termination::MaxItersReached;
    double dual_change = std::numeric_limits<double>::infinity();
    double prev_dual_change = std::numeric_limits<double>::infinity();

    for (int k = 0; k < config.max_iters; ++k) {
        state.rho = rho_at(config, k);
        if (!std::isfinite(state.rho)) {
            termination = Termination::RhoCapReached;
            break;
        }

        const SymMatrix dual_prev = state.dual_theta;
        const double dual_prev_norm = kernels::fro_norm(dual_prev);

        state = iterate(std::move(state), spec);
        if (!state_finite(state))
            throw NumericalBreakdown("non-finite value in ADMM iterate", k);

        prev_dual_change = dual_change;
        dual_change =
            kernels::fro_norm_diff(state.dual_theta, dual_prev) / std::max(1.0, dual_prev_norm);

        if (config.trace)
            result.trace->push_back(compute_diagnostics(spec, state, dual_change));

        // The dual change must stay below epsilon on two consecutive
        // iterations: a single-iteration test fires spuriously at k = 1,
        // where the identity initialization produces a one-step stall of
        // the multipliers away from any fixed point.
        bool converged = dual_change < config.epsilon && prev_dual_change < config.epsilon;
        if (converged && config.strict) {
            const double primal = kernels::fro_norm_diff(state.theta, state.theta_hat) +
                                  kernels::fro_norm_diff(state.gamma_mat, state.gamma_hat);
            converged = primal < config.epsilon;
        }
        if (converged) {
            termination = Termination::Converged;
            break;
        }
        if (state.rho > config.rho_max) {
            termination = Termination::RhoCapReached;
            break;
        }
    }

    result.theta_star = state.theta_hat;
    result.theta_star.symmetrize();
    result.termination = termination;
    result.iters_used = state.iter;
    result.final_diagnostics = (config.trace && !result.trace->empty())
                                   ? result.trace->back()
                                   : compute_diagnostics(spec, state, dual_change);
    return result;
}

}  // namespace glinf
