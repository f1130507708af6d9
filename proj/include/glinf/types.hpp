#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glinf/sym_matrix.hpp"

namespace glinf {

/// Problem instance: sample covariance S, l1 penalty weight gamma on the
/// off-diagonal, and l-infinity bound lambda on the off-diagonal.
/// S need not be positive semidefinite; rank-deficient sample covariances
/// are legal inputs.
struct ProblemSpec {
    SymMatrix s;
    double gamma = 0.0;
    double lambda = 0.0;

    int order() const { return s.order(); }
};

/// Builds a validated ProblemSpec.
/// Throws AsymmetricInput, NegativeParameter, NonFiniteEntry.
ProblemSpec new_problem(SymMatrix s, double gamma, double lambda);

struct SolverConfig {
    double rho0 = 1.0;
    int doubling_interval = 20;
    double rho_max = 1e6;
    double epsilon = 1e-8;
    int max_iters = 10000;
    bool trace = false;
    /// Off by default: additionally require primal residual < epsilon
    /// before declaring convergence.
    bool strict = false;

    void validate() const;
};

/// The six ADMM iterates plus the current penalty and iteration counter.
/// theta is the output of the log-det proximal step and is positive
/// definite at every iteration boundary; theta_hat and gamma_hat are
/// entry-wise equal after every Y-step.
struct SolverState {
    SymMatrix theta, gamma_mat, theta_hat, gamma_hat;
    SymMatrix dual_theta, dual_gamma;
    double rho = 1.0;
    int iter = 0;
};

enum class Termination { Converged, RhoCapReached, MaxItersReached };

std::string to_string(Termination t);

struct Diagnostics {
    double objective = 0.0;
    double aug_lagrangian = 0.0;
    double primal_residual = 0.0;
    double dual_change = 0.0;
    double constraint_violation = 0.0;
    double min_eigenvalue = 0.0;
    double kkt_stationarity = 0.0;
    double rho = 0.0;
    int iter = 0;
};

struct SolveResult {
    SymMatrix theta_star;
    Termination termination = Termination::Converged;
    int iters_used = 0;
    Diagnostics final_diagnostics;
    std::optional<std::vector<Diagnostics>> trace;
};

}  // namespace glinf
