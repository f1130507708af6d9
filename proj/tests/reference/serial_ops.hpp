#pragma once

// Serial reference implementations of the parallel kernels, written as
// straight loops with no OpenMP. Tests compare the library kernels against
// these; bench/ times the two side by side. Kept independent of
// src/kernels.cpp on purpose.

#include <cmath>
#include <cstddef>

namespace glinf_ref {

inline void lincomb(int p, double a, const double* x, double b, const double* y, double* out) {
    const size_t n = static_cast<size_t>(p) * p;
    for (size_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k];
}

inline void lincomb4(int p, double a, const double* x, double b, const double* y, double c,
                     const double* z, double d, const double* w, double* out) {
    const size_t n = static_cast<size_t>(p) * p;
    for (size_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k] + c * z[k] + d * w[k];
}

inline void soft_threshold_offdiag(int p, const double* in, double tau, double* out) {
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const double v = in[static_cast<size_t>(i) * p + j];
            double r = v;
            if (i != j) {
                if (v > tau) r = v - tau;
                else if (v < -tau) r = v + tau;
                else r = 0.0;
            }
            out[static_cast<size_t>(i) * p + j] = r;
        }
    }
}

inline void clip_offdiag(int p, const double* in, double lam, double* out) {
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const double v = in[static_cast<size_t>(i) * p + j];
            double r = v;
            if (i != j) {
                if (v > lam) r = lam;
                else if (v < -lam) r = -lam;
            }
            out[static_cast<size_t>(i) * p + j] = r;
        }
    }
}

inline void spectral_reconstruct(int p, const double* q, const double* w, double* out) {
    for (int i = 0; i < p; ++i) {
        for (int j = i; j < p; ++j) {
            double acc = 0.0;
            for (int k = 0; k < p; ++k)
                acc += q[static_cast<size_t>(i) * p + k] * w[k] *
                       q[static_cast<size_t>(j) * p + k];
            out[static_cast<size_t>(i) * p + j] = acc;
            out[static_cast<size_t>(j) * p + i] = acc;
        }
    }
}

}  // namespace glinf_ref
