#pragma once

#include "glinf/types.hpp"

namespace glinf {

/// Penalty at iteration k under the doubling schedule:
/// rho0 * 2^floor(k / doubling_interval).
double rho_at(const SolverConfig& config, int iter);

/// Primal variables to the identity, duals to zero, rho to rho0.
SolverState initial_state(const ProblemSpec& spec, const SolverConfig& config);

// The three blocks of one ADMM iteration, exposed separately so per-step
// descent of the augmented Lagrangian can be checked on traced runs.

/// theta <- Expand(theta_hat - (S + dual_theta)/rho; rho),
/// gamma_mat <- SoftThreshold(gamma_hat - dual_gamma/rho; gamma/rho).
SolverState x_step(SolverState state, const ProblemSpec& spec);

/// theta_hat <- Clip((theta + gamma_mat)/2 + (dual_theta + dual_gamma)/(2 rho); lambda),
/// gamma_hat <- theta_hat.
SolverState y_step(SolverState state, const ProblemSpec& spec);

/// Dual ascent on both multipliers; increments the iteration counter.
SolverState dual_step(SolverState state);

/// One full iteration: X-step, Y-step, dual step.
SolverState iterate(SolverState state, const ProblemSpec& spec);

/// Runs ADMM with penalty continuation until the dual relative change drops
/// below epsilon, rho exceeds rho_max, or max_iters is hit. When warm_start
/// is given, the four primal matrices start from it (duals stay zero, rho
/// stays rho0). Note the duals are carried unchanged across rho doublings,
/// so the scaled dual Lambda/rho halves at each doubling.
/// Throws NumericalBreakdown when a non-finite value appears in any iterate.
SolveResult solve(const ProblemSpec& spec, const SolverConfig& config,
                  const SymMatrix* warm_start = nullptr);

}  // namespace glinf
