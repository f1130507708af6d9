// Times the OpenMP kernels against the serial reference implementation, then
// times a full solve at a few sizes. Run manually; not registered with ctest.

#include <omp.h>

#include <cstdio>
#include <random>
#include <vector>

#include "../tests/reference/serial_ops.hpp"
#include "glinf/kernels.hpp"
#include "glinf/solver.hpp"
#include "glinf/sym_eig.hpp"

using namespace glinf;

namespace {

std::vector<double> random_buffer(std::mt19937_64& rng, size_t n) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = normal(rng);
    return v;
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void bench_elementwise(int p) {
    std::mt19937_64 rng(90);
    const size_t n = static_cast<size_t>(p) * p;
    auto x = random_buffer(rng, n), y = random_buffer(rng, n);
    std::vector<double> out(n);

    const double serial = time_best_of(5, [&] {
        glinf_ref::lincomb(p, 1.5, x.data(), -0.5, y.data(), out.data());
        glinf_ref::soft_threshold_offdiag(p, out.data(), 0.3, out.data());
        glinf_ref::clip_offdiag(p, out.data(), 0.8, out.data());
    });
    const double parallel = time_best_of(5, [&] {
        kernels::lincomb(p, 1.5, x.data(), -0.5, y.data(), out.data());
        kernels::soft_threshold_offdiag(p, out.data(), 0.3, out.data());
        kernels::clip_offdiag(p, out.data(), 0.8, out.data());
    });
    std::printf("elementwise p=%4d  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx\n", p,
                serial * 1e3, parallel * 1e3, serial / parallel);
}

void bench_reconstruct(int p) {
    std::mt19937_64 rng(91);
    SymMatrix a(p);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j <= i; ++j) a.set(i, j, normal(rng));
    EigenPair eg = eig_sym(a);
    std::vector<double> out(static_cast<size_t>(p) * p);

    const double serial = time_best_of(3, [&] {
        glinf_ref::spectral_reconstruct(p, eg.vectors.data(), eg.values.data(), out.data());
    });
    const double parallel = time_best_of(3, [&] {
        kernels::spectral_reconstruct(p, eg.vectors.data(), eg.values.data(), out.data());
    });
    std::printf("reconstruct p=%4d  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx\n", p,
                serial * 1e3, parallel * 1e3, serial / parallel);
}

void bench_solve(int p) {
    std::mt19937_64 rng(92);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> m(static_cast<size_t>(p) * p);
    for (double& v : m) v = normal(rng);
    SymMatrix s(p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j <= i; ++j) {
            double acc = 0.0;
            for (int k = 0; k < p; ++k)
                acc += m[static_cast<size_t>(k) * p + i] * m[static_cast<size_t>(k) * p + j];
            s.set(i, j, acc / p + (i == j ? 0.1 : 0.0));
        }
    ProblemSpec spec = new_problem(s, 0.1, 0.1);

    const double t0 = omp_get_wtime();
    SolveResult r = solve(spec, SolverConfig{});
    const double secs = omp_get_wtime() - t0;
    std::printf("solve p=%4d  %s in %d iterations, %.3f s\n", p,
                to_string(r.termination).c_str(), r.iters_used, secs);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    for (int p : {200, 500, 1000}) bench_elementwise(p);
    for (int p : {200, 500, 1000}) bench_reconstruct(p);
    for (int p : {50, 100, 200}) bench_solve(p);
    return 0;
}
