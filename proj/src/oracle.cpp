#include "glinf/oracle.hpp"

#include <cmath>

#include "glinf/diagnostics.hpp"
#include "glinf/errors.hpp"
#include "glinf/kernels.hpp"
#include "glinf/sym_eig.hpp"

namespace glinf {

namespace {

// Inner closed form of the p=2 problem at fixed off-diagonal c:
// t solves s11*s22*t^2 - t - c^2 = 0, a = s22*t, b = s11*t, ab - c^2 = t.
double inner_t(double s11, double s22, double c) {
    const double q = s11 * s22;
    return (1.0 + std::sqrt(1.0 + 4.0 * q * c * c)) / (2.0 * q);
}

double reduced_objective(const ProblemSpec& spec, double c) {
    const double s11 = spec.s(0, 0);
    const double s22 = spec.s(1, 1);
    const double t = inner_t(s11, s22, c);
    return -std::log(t) + 2.0 * s11 * s22 * t + 2.0 * spec.s(0, 1) * c +
           2.0 * spec.gamma * std::fabs(c);
}

double golden_section(const ProblemSpec& spec, double lo, double hi, double width) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = reduced_objective(spec, x1);
    double f2 = reduced_objective(spec, x2);
    while (b - a > width) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = reduced_objective(spec, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = reduced_objective(spec, x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

SymMatrix oracle_p2(const ProblemSpec& spec, int grid_n) {
    if (spec.order() != 2) throw DimensionError("oracle_p2 requires p = 2");
    if (grid_n < 3) throw InvalidArgument("grid_n must be at least 3");
    const double s11 = spec.s(0, 0);
    const double s22 = spec.s(1, 1);
    if (s11 <= 0.0 || s22 <= 0.0)
        throw NonPositiveDiagonal("oracle_p2 requires positive diagonal of S");

    double c_star = 0.0;
    if (spec.lambda > 0.0) {
        // Grid scan localizes the bracket (the reduced objective is convex,
        // with kinks possible at 0 and +-lambda), then golden section
        // refines it.
        int best = 0;
        double best_val = std::numeric_limits<double>::infinity();
        const double step = 2.0 * spec.lambda / (grid_n - 1);
        for (int i = 0; i < grid_n; ++i) {
            const double c = -spec.lambda + step * i;
            const double v = reduced_objective(spec, c);
            if (v < best_val) {
                best_val = v;
                best = i;
            }
        }
        const double lo = -spec.lambda + step * std::max(0, best - 1);
        const double hi = -spec.lambda + step * std::min(grid_n - 1, best + 1);
        c_star = golden_section(spec, lo, hi, 1e-10);
        // Snap to the kink points when within refinement width.
        for (double kink : {0.0, spec.lambda, -spec.lambda})
            if (std::fabs(c_star - kink) < 1e-9 &&
                reduced_objective(spec, kink) <= reduced_objective(spec, c_star))
                c_star = kink;
    }

    const double t = inner_t(s11, s22, c_star);
    SymMatrix theta(2);
    theta.set(0, 0, s22 * t);
    theta.set(1, 1, s11 * t);
    theta.set(0, 1, c_star);

    const double audit = kkt_report(spec, theta);
    if (audit > 1e-6)
        throw ConvergenceFailure("oracle_p2 self-audit failed: kkt residual " +
                                 std::to_string(audit));
    return theta;
}

SymMatrix oracle_diagonal(const ProblemSpec& spec) {
    if (spec.lambda != 0.0) throw InvalidArgument("oracle_diagonal requires lambda = 0");
    const int p = spec.order();
    SymMatrix theta(p);
    for (int i = 0; i < p; ++i) {
        if (spec.s(i, i) <= 0.0)
            throw NonPositiveDiagonal("S has nonpositive diagonal entry at " + std::to_string(i));
        theta.set(i, i, 1.0 / spec.s(i, i));
    }
    return theta;
}

SymMatrix oracle_unconstrained(const ProblemSpec& spec) {
    if (spec.gamma != 0.0) throw InvalidArgument("oracle_unconstrained requires gamma = 0");
    const EigenPair eg = eig_sym(spec.s);
    if (eg.values.front() <= 0.0)
        throw NotPositiveDefinite("S is not positive definite; no unconstrained optimum");
    SymMatrix inv = apply_spectral(eg, [](double d) { return 1.0 / d; });
    if (kernels::max_abs_offdiag(inv) > spec.lambda)
        throw ConstraintActive("off-diagonal of S^-1 exceeds lambda; bound is active");
    return inv;
}

}  // namespace glinf
