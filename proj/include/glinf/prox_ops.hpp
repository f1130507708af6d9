#pragma once

#include "glinf/sym_matrix.hpp"

namespace glinf {

/// Proximal operator of -logdet at penalty rho:
///   argmin_Theta -logdet(Theta) + (rho/2) ||Theta - A||_F^2.
/// Computed spectrally: each eigenvalue d of A maps to
/// (d + sqrt(d^2 + 4/rho)) / 2, which is positive for every real d, so the
/// result is positive definite even for indefinite or singular A.
SymMatrix expand(const SymMatrix& a, double rho);

/// Off-diagonal soft threshold by tau; diagonal passed through.
SymMatrix soft_threshold_offdiag(const SymMatrix& a, double tau);

/// Off-diagonal projection onto [-lambda, lambda]; diagonal passed through.
/// Idempotent.
SymMatrix clip_offdiag(const SymMatrix& a, double lambda);

}  // namespace glinf
