#include "glinf/types.hpp"

#include <cmath>

#include "glinf/errors.hpp"

namespace glinf {

ProblemSpec new_problem(SymMatrix s, double gamma, double lambda) {
    if (!std::isfinite(gamma) || !std::isfinite(lambda))
        throw NonFiniteEntry("gamma and lambda must be finite");
    if (gamma < 0.0) throw NegativeParameter("gamma must be nonnegative, got " + std::to_string(gamma));
    if (lambda < 0.0) throw NegativeParameter("lambda must be nonnegative, got " + std::to_string(lambda));
    // s was built through SymMatrix::validated or from_data, so symmetry and
    // finiteness already hold.
    return ProblemSpec{std::move(s), gamma, lambda};
}

void SolverConfig::validate() const {
    if (!(rho0 > 0.0) || !std::isfinite(rho0)) throw InvalidArgument("rho0 must be positive");
    if (doubling_interval < 1) throw InvalidArgument("doubling_interval must be positive");
    if (!(rho_max > 0.0) || !std::isfinite(rho_max)) throw InvalidArgument("rho_max must be positive");
    if (rho0 > rho_max) throw InvalidArgument("rho0 must not exceed rho_max");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InvalidArgument("epsilon must be positive");
    if (max_iters < 1) throw InvalidArgument("max_iters must be positive");
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::Converged: return "converged";
        case Termination::RhoCapReached: return "rho_cap_reached";
        case Termination::MaxItersReached: return "max_iters_reached";
    }
    return "unknown";
}

}  // namespace glinf
