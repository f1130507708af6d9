#include "glinf/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace glinf::kernels {

namespace {
constexpr std::int64_t kParallelCutoff = 64 * 64;  // below this, threading overhead dominates
}

void lincomb(int p, double a, const double* x, double b, const double* y, double* out) {
    const std::int64_t n = static_cast<std::int64_t>(p) * p;
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::int64_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k];
}

void lincomb4(int p, double a, const double* x, double b, const double* y, double c,
              const double* z, double d, const double* w, double* out) {
    const std::int64_t n = static_cast<std::int64_t>(p) * p;
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
    for (std::int64_t k = 0; k < n; ++k)
        out[k] = a * x[k] + b * y[k] + c * z[k] + d * w[k];
}

void soft_threshold_offdiag(int p, const double* in, double tau, double* out) {
#pragma omp parallel for schedule(static) if (static_cast<std::int64_t>(p) * p >= kParallelCutoff)
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const double v = in[static_cast<size_t>(i) * p + j];
            out[static_cast<size_t>(i) * p + j] =
                (i == j) ? v : std::copysign(std::fmax(std::fabs(v) - tau, 0.0), v);
        }
    }
}

void clip_offdiag(int p, const double* in, double lam, double* out) {
#pragma omp parallel for schedule(static) if (static_cast<std::int64_t>(p) * p >= kParallelCutoff)
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const double v = in[static_cast<size_t>(i) * p + j];
            out[static_cast<size_t>(i) * p + j] =
                (i == j) ? v : std::copysign(std::fmin(std::fabs(v), lam), v);
        }
    }
}

void spectral_reconstruct(int p, const double* q, const double* w, double* out) {
#pragma omp parallel for schedule(dynamic, 4) if (p >= 64)
    for (int i = 0; i < p; ++i) {
        const double* qi = q + static_cast<size_t>(i) * p;
        for (int j = i; j < p; ++j) {
            const double* qj = q + static_cast<size_t>(j) * p;
            double acc = 0.0;
            for (int k = 0; k < p; ++k) acc += qi[k] * w[k] * qj[k];
            out[static_cast<size_t>(i) * p + j] = acc;
            out[static_cast<size_t>(j) * p + i] = acc;
        }
    }
}

double fro_norm(int p, const double* x) {
    const std::int64_t n = static_cast<std::int64_t>(p) * p;
    double acc = 0.0;
    for (std::int64_t k = 0; k < n; ++k) acc += x[k] * x[k];
    return std::sqrt(acc);
}

double fro_norm_diff(int p, const double* x, const double* y) {
    const std::int64_t n = static_cast<std::int64_t>(p) * p;
    double acc = 0.0;
    for (std::int64_t k = 0; k < n; ++k) {
        const double d = x[k] - y[k];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double dot(int p, const double* x, const double* y) {
    const std::int64_t n = static_cast<std::int64_t>(p) * p;
    double acc = 0.0;
    for (std::int64_t k = 0; k < n; ++k) acc += x[k] * y[k];
    return acc;
}

double max_abs_offdiag(int p, const double* x) {
    double m = 0.0;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j) m = std::fmax(m, std::fabs(x[static_cast<size_t>(i) * p + j]));
    return m;
}

SymMatrix lincomb(double a, const SymMatrix& x, double b, const SymMatrix& y) {
    SymMatrix out(x.order());
    lincomb(x.order(), a, x.data(), b, y.data(), out.data());
    return out;
}

SymMatrix lincomb4(double a, const SymMatrix& x, double b, const SymMatrix& y, double c,
                   const SymMatrix& z, double d, const SymMatrix& w) {
    SymMatrix out(x.order());
    lincomb4(x.order(), a, x.data(), b, y.data(), c, z.data(), d, w.data(), out.data());
    return out;
}

double fro_norm(const SymMatrix& x) { return fro_norm(x.order(), x.data()); }

double fro_norm_diff(const SymMatrix& x, const SymMatrix& y) {
    return fro_norm_diff(x.order(), x.data(), y.data());
}

double dot(const SymMatrix& x, const SymMatrix& y) { return dot(x.order(), x.data(), y.data()); }

double max_abs_offdiag(const SymMatrix& x) { return max_abs_offdiag(x.order(), x.data()); }

}  // namespace glinf::kernels
