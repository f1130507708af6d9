#pragma once

#include <cstddef>

#include "glinf/sym_matrix.hpp"

namespace glinf::kernels {

// Raw element-wise kernels over row-major p x p buffers. The library builds
// them with OpenMP loops; tests compare against the serial reference
// implementation in tests/reference/, and bench/ times both.

/// out[k] = a*x[k] + b*y[k]
void lincomb(int p, double a, const double* x, double b, const double* y, double* out);

/// out[k] = a*x[k] + b*y[k] + c*z[k] + d*w[k]
void lincomb4(int p, double a, const double* x, double b, const double* y, double c,
              const double* z, double d, const double* w, double* out);

/// Off-diagonal soft threshold by tau, diagonal passed through.
void soft_threshold_offdiag(int p, const double* in, double tau, double* out);

/// Off-diagonal clip to [-lam, lam], diagonal passed through.
void clip_offdiag(int p, const double* in, double lam, double* out);

/// out = Q diag(w) Q^T, computed on the upper triangle and mirrored so the
/// result is exactly symmetric. Q is row-major p x p, w length p.
void spectral_reconstruct(int p, const double* q, const double* w, double* out);

// Reductions are kept serial so traces are bit-reproducible regardless of
// thread count.
double fro_norm(int p, const double* x);
double fro_norm_diff(int p, const double* x, const double* y);
double dot(int p, const double* x, const double* y);
double max_abs_offdiag(int p, const double* x);

// SymMatrix-level wrappers.
SymMatrix lincomb(double a, const SymMatrix& x, double b, const SymMatrix& y);
SymMatrix lincomb4(double a, const SymMatrix& x, double b, const SymMatrix& y, double c,
                   const SymMatrix& z, double d, const SymMatrix& w);
double fro_norm(const SymMatrix& x);
double fro_norm_diff(const SymMatrix& x, const SymMatrix& y);
double dot(const SymMatrix& x, const SymMatrix& y);
double max_abs_offdiag(const SymMatrix& x);

}  // namespace glinf::kernels
