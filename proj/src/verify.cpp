#include "glinf/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "glinf/diagnostics.hpp"
#include "glinf/errors.hpp"
#include "glinf/oracle.hpp"
#include "glinf/solver.hpp"

namespace glinf {

namespace {

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
    double m = 0.0;
    for (size_t k = 0; k < a.size(); ++k)
        m = std::max(m, std::fabs(a.data()[k] - b.data()[k]));
    return m;
}

}  // namespace

VerifyReport run_verify_suite(std::uint64_t seed, int num_cases) {
    if (num_cases < 1) throw InvalidArgument("number of cases must be positive");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unif_gamma(0.0, 1.0);
    std::uniform_real_distribution<double> unif_lambda(0.01, 2.0);

    VerifyReport report;
    report.all_pass = true;

    for (int c = 0; c < num_cases; ++c) {
        double m[4];
        for (double& v : m) v = normal(rng);
        // S = M^T M + 0.1 I
        double s_raw[4];
        s_raw[0] = m[0] * m[0] + m[2] * m[2] + 0.1;
        s_raw[3] = m[1] * m[1] + m[3] * m[3] + 0.1;
        s_raw[1] = s_raw[2] = m[0] * m[1] + m[2] * m[3];

        VerifyCase vc;
        vc.gamma = unif_gamma(rng);
        vc.lambda = unif_lambda(rng);
        try {
            const ProblemSpec spec =
                new_problem(SymMatrix::from_data(2, s_raw), vc.gamma, vc.lambda);
            const SolveResult result = solve(spec, SolverConfig{});
            const SymMatrix reference = oracle_p2(spec);

            vc.termination = to_string(result.termination);
            vc.max_diff = max_abs_diff(result.theta_star, reference);
            vc.objective_gap =
                objective(spec, result.theta_star) - objective(spec, reference);
            vc.kkt_solver = kkt_report(spec, result.theta_star);

            vc.pass = true;
            if (vc.max_diff > 1e-4) vc.failure = "solver/oracle disagreement";
            else if (vc.objective_gap < -1e-6) vc.failure = "oracle objective worse than solver";
            else if (vc.kkt_solver > 1e-4) vc.failure = "solver KKT residual too large";
            vc.pass = vc.failure.empty();
        } catch (const Error& e) {
            vc.pass = false;
            vc.failure = e.what();
        }

        report.worst_diff = std::max(report.worst_diff, vc.max_diff);
        report.worst_kkt = std::max(report.worst_kkt, vc.kkt_solver);
        report.all_pass = report.all_pass && vc.pass;
        report.cases.push_back(std::move(vc));
    }
    return report;
}

std::string format_verify_report(const VerifyReport& report) {
    std::ostringstream out;
    out.precision(6);
    out << "case  gamma     lambda    max_diff      obj_gap       kkt         status\n";
    int idx = 0;
    int passed = 0;
    for (const VerifyCase& vc : report.cases) {
        out << idx++ << '\t' << vc.gamma << '\t' << vc.lambda << '\t' << vc.max_diff << '\t'
            << vc.objective_gap << '\t' << vc.kkt_solver << '\t'
            << (vc.pass ? "pass" : "FAIL: " + vc.failure) << '\n';
        if (vc.pass) ++passed;
    }
    out << passed << "/" << report.cases.size() << " passed; worst max_diff " << report.worst_diff
        << ", worst kkt " << report.worst_kkt << '\n';
    return out.str();
}

}  // namespace glinf
