#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glinf/types.hpp"

namespace glinf {

/// One randomized oracle-agreement case: a seeded p=2 instance solved by
/// both the ADMM path and the independent p=2 oracle.
struct VerifyCase {
    double gamma = 0.0;
    double lambda = 0.0;
    double max_diff = 0.0;       // ||theta_star - oracle||_max
    double objective_gap = 0.0;  // objective(solver) - objective(oracle)
    double kkt_solver = 0.0;
    std::string termination;
    bool pass = false;
    std::string failure;  // empty when pass
};

struct VerifyReport {
    std::vector<VerifyCase> cases;
    bool all_pass = false;
    double worst_diff = 0.0;
    double worst_kkt = 0.0;
};

/// Instances: S = M^T M + 0.1 I with M ~ N(0,1)^{2x2}, gamma ~ U[0,1],
/// lambda ~ U[0.01, 2]. Thresholds: max-norm agreement 1e-4, oracle
/// objective no worse than solver + 1e-6, solver KKT residual <= 1e-4.
VerifyReport run_verify_suite(std::uint64_t seed, int num_cases);

std::string format_verify_report(const VerifyReport& report);

}  // namespace glinf
