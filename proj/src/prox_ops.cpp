#include "glinf/prox_ops.hpp"

#include <cmath>

#include "glinf/errors.hpp"
#include "glinf/kernels.hpp"
#include "glinf/sym_eig.hpp"

namespace glinf {

SymMatrix expand(const SymMatrix& a, double rho) {
    if (!(rho > 0.0)) throw InvalidArgument("expand requires rho > 0");
    // Applying the scalar map to the eigenvalues of A avoids forming
    // rho^2 A^2 + 4 rho I, which would square the condition number.
    const double four_over_rho = 4.0 / rho;
    return apply_spectral(a, [four_over_rho](double d) {
        return 0.5 * (d + std::sqrt(d * d + four_over_rho));
    });
}

SymMatrix soft_threshold_offdiag(const SymMatrix& a, double tau) {
    if (tau < 0.0) throw NegativeParameter("soft threshold requires tau >= 0");
    SymMatrix out(a.order());
    kernels::soft_threshold_offdiag(a.order(), a.data(), tau, out.data());
    return out;
}

SymMatrix clip_offdiag(const SymMatrix& a, double lambda) {
    if (lambda < 0.0) throw NegativeParameter("clip requires lambda >= 0");
    SymMatrix out(a.order());
    kernels::clip_offdiag(a.order(), a.data(), lambda, out.data());
    return out;
}

}  // namespace glinf
