#pragma once

#include "glinf/types.hpp"

namespace glinf {

/// -logdet(theta) + <S, theta> + gamma * ||offdiag(theta)||_1.
/// logdet is the sum of logs of eigenvalues.
/// Throws NotPositiveDefinite if any eigenvalue of theta is <= 0.
double objective(const ProblemSpec& spec, const SymMatrix& theta);

/// Augmented Lagrangian at the given state. The indicator terms of the
/// Y-block (off-diagonal bound and theta_hat = gamma_hat consensus) return
/// the +infinity sentinel when violated by more than 1e-9.
/// Throws NotPositiveDefinite if state.theta is not PD.
double aug_lagrangian(const ProblemSpec& spec, const SolverState& state);

/// Max first-order stationarity residual of the objective at theta.
/// Off-diagonal entries are classified as interior / zero / at-bound with
/// tolerance tol (default 1e-7 * max(1, lambda) when tol < 0); an active
/// bound requires a nonnegative multiplier. Diagonal entries contribute
/// |(-theta^-1 + S)_ii|.
/// Throws NotPositiveDefinite.
double kkt_report(const ProblemSpec& spec, const SymMatrix& theta, double tol = -1.0);

/// Full per-iteration diagnostics record. Objective, min eigenvalue and KKT
/// residual are evaluated at theta_hat; a non-PD theta_hat yields the
/// +infinity sentinel for objective and KKT instead of an exception.
Diagnostics compute_diagnostics(const ProblemSpec& spec, const SolverState& state,
                                double dual_change);

}  // namespace glinf
