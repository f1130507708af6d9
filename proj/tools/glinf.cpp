#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "glinf/diagnostics.hpp"
#include "glinf/errors.hpp"
#include "glinf/io.hpp"
#include "glinf/oracle.hpp"
#include "glinf/solver.hpp"
#include "glinf/verify.hpp"

namespace {

enum LogLevel { kQuiet = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("GLINF_LOG");
    if (!env) return kQuiet;
    const std::string v(env);
    if (v == "debug") return kDebug;
    if (v == "info") return kInfo;
    return kQuiet;
}

void log_info(const std::string& msg) {
    if (log_level() >= kInfo) std::cerr << "glinf: " << msg << '\n';
}

int exit_code_for(glinf::Termination t) {
    switch (t) {
        case glinf::Termination::Converged: return 0;
        case glinf::Termination::RhoCapReached: return 2;
        case glinf::Termination::MaxItersReached: return 3;
    }
    return 1;
}

struct CommonOpts {
    std::string samples_path, covariance_path;
    double epsilon = 1e-8;
    double rho0 = 1.0;
    int doubling_interval = 20;
    double rho_max = 1e6;
    int max_iters = 10000;
    int ddof = 0;
    std::string out_path;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    auto* samples = cmd->add_option("--samples", o.samples_path, "CSV of observations, one per row");
    auto* cov = cmd->add_option("--covariance", o.covariance_path, "CSV of a covariance matrix");
    samples->excludes(cov);
    cov->excludes(samples);
    cmd->add_option("--epsilon", o.epsilon, "relative-error tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--rho0", o.rho0, "initial penalty")->check(CLI::PositiveNumber);
    cmd->add_option("--doubling-interval", o.doubling_interval,
                    "iterations between penalty doublings")->check(CLI::PositiveNumber);
    cmd->add_option("--rho-max", o.rho_max, "penalty cap")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", o.max_iters, "iteration backstop")->check(CLI::PositiveNumber);
    cmd->add_option("--ddof", o.ddof, "covariance denominator n - ddof")
        ->check(CLI::Range(0, 1));
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

glinf::SymMatrix load_input_covariance(const CommonOpts& o) {
    if (o.samples_path.empty() && o.covariance_path.empty())
        throw glinf::InvalidArgument("one of --samples or --covariance is required");
    if (!o.covariance_path.empty()) {
        log_info("loading covariance from " + o.covariance_path);
        return glinf::load_covariance(o.covariance_path);
    }
    log_info("loading samples from " + o.samples_path);
    const glinf::DataMatrix data = glinf::load_samples(o.samples_path);
    return glinf::sample_covariance(data, o.ddof);
}

glinf::SolverConfig make_config(const CommonOpts& o, bool trace) {
    glinf::SolverConfig c;
    c.epsilon = o.epsilon;
    c.rho0 = o.rho0;
    c.doubling_interval = o.doubling_interval;
    c.rho_max = o.rho_max;
    c.max_iters = o.max_iters;
    c.trace = trace;
    return c;
}

void write_output(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_path);
    if (!out) throw glinf::InvalidArgument("cannot open output file " + o.out_path);
    out << text;
}

int run_solve(const CommonOpts& o, double gamma, double lambda, const std::string& trace_path) {
    const glinf::ProblemSpec spec = glinf::new_problem(load_input_covariance(o), gamma, lambda);
    const glinf::SolverConfig config = make_config(o, !trace_path.empty());

    const glinf::SolveResult result = glinf::solve(spec, config);
    log_info("terminated: " + glinf::to_string(result.termination) + " after " +
             std::to_string(result.iters_used) + " iterations");

    if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        if (!tf) throw glinf::InvalidArgument("cannot open trace file " + trace_path);
        glinf::write_trace_csv(tf, *result.trace);
    }

    if (o.format == "csv") {
        write_output(o, glinf::result_csv(result));
    } else {
        write_output(o, glinf::result_document(result).dump(2) + "\n");
    }
    return exit_code_for(result.termination);
}

struct SweepPoint {
    double gamma, lambda;
    glinf::SolveResult result;
};

int run_sweep(const CommonOpts& o, std::vector<double> gammas, std::vector<double> lambdas,
              bool warm_start, int jobs) {
    for (const auto* list : {&gammas, &lambdas}) {
        if (list->empty()) throw glinf::InvalidArgument("sweep lists must be nonempty");
        for (size_t i = 1; i < list->size(); ++i)
            if ((*list)[i] <= (*list)[i - 1])
                throw glinf::InvalidArgument("sweep lists must be strictly ascending");
        if (list->front() < 0.0)
            throw glinf::InvalidArgument("sweep values must be nonnegative");
    }

    const glinf::SymMatrix s = load_input_covariance(o);
    const glinf::SolverConfig config = make_config(o, false);

    const int ng = static_cast<int>(gammas.size());
    const int nl = static_cast<int>(lambdas.size());
    std::vector<SweepPoint> points(static_cast<size_t>(ng) * nl);

    // One warm-start chain per gamma, sweeping lambda in ascending order.
    // Chains are independent, so --jobs parallelizes across them.
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
    for (int gi = 0; gi < ng; ++gi) {
        std::optional<glinf::SymMatrix> prev;
        for (int li = 0; li < nl; ++li) {
            const glinf::ProblemSpec spec = glinf::new_problem(s, gammas[gi], lambdas[li]);
            glinf::SolveResult r =
                glinf::solve(spec, config, warm_start && prev ? &*prev : nullptr);
            prev = r.theta_star;
            points[static_cast<size_t>(li) * ng + gi] = {gammas[gi], lambdas[li], std::move(r)};
        }
    }

    // Records are emitted in lambda-major order (lambda outer, gamma inner).
    int worst = 0;
    nlohmann::json results = nlohmann::json::array();
    nlohmann::json summary = nlohmann::json::array();
    std::string summary_csv = "gamma,lambda,objective,iters,termination\n";
    for (const SweepPoint& pt : points) {
        nlohmann::json rec = glinf::result_document(pt.result);
        rec["gamma"] = pt.gamma;
        rec["lambda"] = pt.lambda;
        results.push_back(std::move(rec));
        summary.push_back({{"gamma", pt.gamma},
                           {"lambda", pt.lambda},
                           {"objective", pt.result.final_diagnostics.objective},
                           {"iters", pt.result.iters_used},
                           {"termination", glinf::to_string(pt.result.termination)}});
        summary_csv += std::to_string(pt.gamma) + "," + std::to_string(pt.lambda) + "," +
                       std::to_string(pt.result.final_diagnostics.objective) + "," +
                       std::to_string(pt.result.iters_used) + "," +
                       glinf::to_string(pt.result.termination) + "\n";
        worst = std::max(worst, exit_code_for(pt.result.termination));
    }

    if (o.format == "csv") {
        write_output(o, summary_csv);
    } else {
        write_output(o, nlohmann::json{{"results", results}, {"summary", summary}}.dump(2) + "\n");
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graphical lasso with an element-wise l-infinity bound on the precision matrix"};
    app.require_subcommand(1);

    CommonOpts solve_opts;
    double gamma = 0.0, lambda = 0.0;
    std::string trace_path;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a single instance");
    add_common(solve_cmd, solve_opts);
    solve_cmd->add_option("--gamma", gamma, "l1 penalty weight")->required()
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--lambda", lambda, "l-infinity bound")->required()
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--trace", trace_path, "write per-iteration diagnostics CSV here");

    CommonOpts sweep_opts;
    std::vector<double> gammas, lambdas;
    bool warm = true;
    int jobs = 1;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "solve a (gamma, lambda) grid");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--gammas", gammas, "ascending gamma values")->required()->delimiter(',');
    sweep_cmd->add_option("--lambdas", lambdas, "ascending lambda values")->required()->delimiter(',');
    sweep_cmd->add_flag("--warm-start,!--cold-start", warm, "warm start along each lambda chain");
    sweep_cmd->add_option("--jobs", jobs, "parallel warm-start chains")->check(CLI::PositiveNumber);

    std::uint64_t seed = 42;
    int cases = 50;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the randomized oracle-agreement suite");
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--cases", cases, "number of random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_opts, gamma, lambda, trace_path);
        if (sweep_cmd->parsed())
            return run_sweep(sweep_opts, gammas, lambdas, warm, jobs);
        if (verify_cmd->parsed()) {
            if (cases < 1) {
                std::cerr << "--cases must be positive\n";
                return 1;
            }
            const glinf::VerifyReport report = glinf::run_verify_suite(seed, cases);
            std::cout << glinf::format_verify_report(report);
            return report.all_pass ? 0 : 4;
        }
    } catch (const glinf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
