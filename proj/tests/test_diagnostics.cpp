#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "glinf/diagnostics.hpp"
#include "glinf/kernels.hpp"
#include "glinf/oracle.hpp"
#include "glinf/prox_ops.hpp"
#include "glinf/solver.hpp"
#include "glinf/sym_eig.hpp"
#include "test_util.hpp"

using namespace glinf;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ProblemSpec spec_2x2(double s11, double s12, double s22, double gamma, double lambda) {
    const double raw[] = {s11, s12, s12, s22};
    return new_problem(SymMatrix::from_data(2, raw), gamma, lambda);
}

}  // namespace

TEST_CASE("objective on fixed inputs") {
    ProblemSpec spec = new_problem(SymMatrix::identity(2), 0.7, 1.0);
    CHECK(objective(spec, SymMatrix::identity(2)) == doctest::Approx(2.0));

    ProblemSpec spec2 = spec_2x2(2.0, 0.8, 1.0, 1.0, 1.0);
    SymMatrix theta(2);
    theta.set(0, 0, 0.5);
    theta.set(1, 1, 1.0);
    CHECK(objective(spec2, theta) == doctest::Approx(-std::log(0.5) + 2.0));

    SymMatrix singular(2);
    singular.set(0, 0, 1.0);  // second eigenvalue is zero
    CHECK_THROWS_AS(objective(spec2, singular), NotPositiveDefinite);
}

TEST_CASE("augmented Lagrangian at a consensus state equals the split objective") {
    ProblemSpec spec = spec_2x2(1.4, 0.3, 1.1, 0.6, 0.5);
    SolverState s = initial_state(spec, SolverConfig{});
    // theta = theta_hat = gamma_mat = gamma_hat = I, duals zero, feasible
    const double f = objective(spec, s.theta) - spec.gamma * 0.0;  // off-diagonals are zero
    CHECK(aug_lagrangian(spec, s) == doctest::Approx(f));
}

TEST_CASE("augmented Lagrangian indicator violations return the infinity sentinel") {
    ProblemSpec spec = spec_2x2(1.4, 0.3, 1.1, 0.6, 0.5);
    SolverState s = initial_state(spec, SolverConfig{});

    SUBCASE("consensus violation") {
        s.gamma_hat.set(0, 1, 0.3);  // theta_hat still 0 there
        CHECK(aug_lagrangian(spec, s) == kInf);
    }
    SUBCASE("bound violation") {
        s.theta_hat.set(0, 1, 0.8);
        s.gamma_hat.set(0, 1, 0.8);
        CHECK(aug_lagrangian(spec, s) == kInf);
    }
}

TEST_CASE("augmented Lagrangian cross-checked by independent term-by-term sum") {
    std::mt19937_64 rng(51);
    ProblemSpec spec = spec_2x2(1.4, 0.3, 1.1, 0.6, 0.5);
    SolverState s = initial_state(spec, SolverConfig{});
    s.rho = 2.0;
    s.theta = expand(glinf_test::random_sym(rng, 2), 1.0);
    s.gamma_mat = glinf_test::random_sym(rng, 2);
    s.theta_hat = clip_offdiag(glinf_test::random_sym(rng, 2, 0.3), spec.lambda);
    s.gamma_hat = s.theta_hat;
    s.dual_theta = glinf_test::random_sym(rng, 2);
    s.dual_gamma = glinf_test::random_sym(rng, 2);

    double manual = objective(spec, s.theta);
    manual -= spec.gamma * 0.0;
    // swap the l1 part from theta to gamma_mat
    double l1_theta = 0.0, l1_gamma = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (i != j) {
                l1_theta += std::fabs(s.theta(i, j));
                l1_gamma += std::fabs(s.gamma_mat(i, j));
            }
    manual += spec.gamma * (l1_gamma - l1_theta);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double rt = s.theta(i, j) - s.theta_hat(i, j);
            const double rg = s.gamma_mat(i, j) - s.gamma_hat(i, j);
            manual += s.dual_theta(i, j) * rt + s.dual_gamma(i, j) * rg;
            manual += 0.5 * s.rho * (rt * rt + rg * rg);
        }
    CHECK(aug_lagrangian(spec, s) == doctest::Approx(manual).epsilon(1e-10));
}

TEST_CASE("kkt residual at known optima") {
    SUBCASE("identity optimum of the identity problem") {
        ProblemSpec spec = new_problem(SymMatrix::identity(2), 0.1, 0.05);
        CHECK(kkt_report(spec, SymMatrix::identity(2)) <= 1e-12);
    }
    SUBCASE("unconstrained stationary point S^-1") {
        ProblemSpec spec = spec_2x2(2.0, 1.0, 2.0, 0.0, 10.0);
        SymMatrix inv(2);
        inv.set(0, 0, 2.0 / 3.0);
        inv.set(1, 1, 2.0 / 3.0);
        inv.set(0, 1, -1.0 / 3.0);
        CHECK(kkt_report(spec, inv) <= 1e-10);
    }
    SUBCASE("oracle solution passes its own audit") {
        ProblemSpec spec = spec_2x2(1.0, 0.9, 1.0, 0.0, 0.2);
        SymMatrix theta = oracle_p2(spec);
        CHECK(kkt_report(spec, theta) <= 1e-4);
    }
    SUBCASE("non-PD input is rejected") {
        ProblemSpec spec = spec_2x2(1.0, 0.2, 1.0, 0.1, 0.5);
        SymMatrix bad(2);
        bad.set(0, 0, 1.0);
        bad.set(1, 1, -1.0);
        CHECK_THROWS_AS(kkt_report(spec, bad), NotPositiveDefinite);
    }
}

TEST_CASE("dual_change at termination is below epsilon on converged runs") {
    ProblemSpec spec = spec_2x2(1.5, 0.6, 0.9, 0.2, 0.3);
    SolverConfig c;
    c.trace = true;
    SolveResult r = solve(spec, c);
    REQUIRE(r.termination == Termination::Converged);
    CHECK(r.trace->back().dual_change < c.epsilon);
}

TEST_CASE("objective at theta_star beats random feasible PD perturbations") {
    std::mt19937_64 rng(52);
    ProblemSpec spec = spec_2x2(1.5, 0.6, 0.9, 0.2, 0.3);
    SolveResult r = solve(spec, SolverConfig{});
    const double base = objective(spec, r.theta_star);
    int checked = 0;
    while (checked < 100) {
        SymMatrix delta = glinf_test::random_sym(rng, 2, 0.05);
        SymMatrix cand = kernels::lincomb(1.0, r.theta_star, 1.0, delta);
        cand = clip_offdiag(cand, spec.lambda);
        EigenPair eg = eig_sym(cand);
        if (eg.values.front() <= 0.0) continue;
        ++checked;
        CHECK(base <= objective(spec, cand) + 1e-6);
    }
}

TEST_CASE("augmented Lagrangian descends across the X-step and the Y-step") {
    ProblemSpec spec = spec_2x2(1.5, 0.6, 0.9, 0.2, 0.3);
    SolverConfig config;
    SolverState s = initial_state(spec, config);
    for (int k = 0; k < 60; ++k) {
        s.rho = rho_at(config, k);
        const double before = aug_lagrangian(spec, s);
        SolverState after_x = x_step(s, spec);
        const double mid = aug_lagrangian(spec, after_x);
        SolverState after_y = y_step(after_x, spec);
        const double after = aug_lagrangian(spec, after_y);
        const double slack = 1e-9 * std::max(1.0, std::fabs(before));
        CHECK(mid <= before + slack);
        CHECK(after <= mid + slack);
        s = dual_step(after_y);
    }
}

TEST_CASE("compute_diagnostics fields are consistent") {
    ProblemSpec spec = spec_2x2(1.5, 0.6, 0.9, 0.2, 0.3);
    SolverConfig c;
    c.trace = true;
    SolveResult r = solve(spec, c);
    for (const Diagnostics& d : *r.trace) {
        CHECK(d.constraint_violation >= 0.0);
        CHECK(d.constraint_violation <= 1e-9);  // theta_hat is a clip output
        CHECK(d.primal_residual >= 0.0);
        CHECK(std::isfinite(d.rho));
    }
}
