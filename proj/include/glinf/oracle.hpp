#pragma once

#include "glinf/types.hpp"

namespace glinf {

// Independent small-instance reference solvers used to validate the ADMM
// path. They deliberately share no code with the solver or the proximal
// operators (only the eigendecomposition primitive).

/// Exact minimizer for p = 2. Parameterizing theta = [[a, c], [c, b]], the
/// inner minimum over (a, b) at fixed c is closed-form; the reduced
/// one-dimensional objective in c is convex and is minimized by a grid scan
/// over [-lambda, lambda] followed by golden-section refinement of the best
/// bracket to width 1e-10. Self-audits: throws ConvergenceFailure if the
/// returned matrix fails kkt_report <= 1e-6.
/// Throws DimensionError (p != 2), NonPositiveDiagonal.
SymMatrix oracle_p2(const ProblemSpec& spec, int grid_n = 2001);

/// Analytic optimum for lambda = 0: diag(1/S_11, ..., 1/S_pp).
/// Throws InvalidArgument (lambda != 0), NonPositiveDiagonal.
SymMatrix oracle_diagonal(const ProblemSpec& spec);

/// S^-1 via eigendecomposition, valid when gamma = 0 and the bound is
/// inactive. Throws NotPositiveDefinite (S singular), ConstraintActive
/// (an off-diagonal of S^-1 exceeds lambda), InvalidArgument (gamma != 0).
SymMatrix oracle_unconstrained(const ProblemSpec& spec);

}  // namespace glinf
