#pragma once

#include <functional>
#include <vector>

#include "glinf/sym_matrix.hpp"

namespace glinf {

/// Eigendecomposition A = Q diag(d) Q^T of a symmetric matrix.
/// Eigenvalues ascending; columns of Q orthonormal. The sign of each column
/// is fixed so its first nonzero component is nonnegative, which makes
/// decompositions deterministic.
struct EigenPair {
    int p = 0;
    std::vector<double> values;   // length p, ascending
    std::vector<double> vectors;  // row-major p x p; column k is the k-th eigenvector

    double vec(int i, int k) const { return vectors[static_cast<size_t>(i) * p + k]; }
};

/// Throws ConvergenceFailure if the iterative eigensolver fails.
EigenPair eig_sym(const SymMatrix& a);

/// Q diag(phi(d)) Q^T for the decomposition of `a`, re-symmetrized exactly.
SymMatrix apply_spectral(const SymMatrix& a, const std::function<double(double)>& phi);

/// Same, reusing an existing decomposition.
SymMatrix apply_spectral(const EigenPair& eg, const std::function<double(double)>& phi);

}  // namespace glinf
