#include "glinf/sym_eig.hpp"

#include <Eigen/Dense>

#include "glinf/kernels.hpp"

namespace glinf {

EigenPair eig_sym(const SymMatrix& a) {
    const int p = a.order();
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        a.data(), p, p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("symmetric eigensolver did not converge");

    EigenPair eg;
    eg.p = p;
    eg.values.resize(p);
    eg.vectors.resize(static_cast<size_t>(p) * p);
    for (int k = 0; k < p; ++k) eg.values[k] = solver.eigenvalues()(k);

    // Sign convention: first nonzero component of each column nonnegative.
    for (int k = 0; k < p; ++k) {
        double sign = 1.0;
        for (int i = 0; i < p; ++i) {
            const double v = solver.eigenvectors()(i, k);
            if (v != 0.0) {
                sign = v < 0.0 ? -1.0 : 1.0;
                break;
            }
        }
        for (int i = 0; i < p; ++i)
            eg.vectors[static_cast<size_t>(i) * p + k] = sign * solver.eigenvectors()(i, k);
    }
    return eg;
}

SymMatrix apply_spectral(const EigenPair& eg, const std::function<double(double)>& phi) {
    std::vector<double> mapped(eg.p);
    for (int k = 0; k < eg.p; ++k) mapped[k] = phi(eg.values[k]);
    SymMatrix out(eg.p);
    kernels::spectral_reconstruct(eg.p, eg.vectors.data(), mapped.data(), out.data());
    return out;
}

SymMatrix apply_spectral(const SymMatrix& a, const std::function<double(double)>& phi) {
    return apply_spectral(eig_sym(a), phi);
}

}  // namespace glinf
