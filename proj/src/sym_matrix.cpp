#include "glinf/sym_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace glinf {

SymMatrix::SymMatrix(int p) : p_(p) {
    if (p < 1) throw DimensionError("matrix order must be positive, got " + std::to_string(p));
    data_.assign(static_cast<size_t>(p) * p, 0.0);
}

SymMatrix SymMatrix::identity(int p) {
    SymMatrix m(p);
    for (int i = 0; i < p; ++i) m.data_[static_cast<size_t>(i) * p + i] = 1.0;
    return m;
}

SymMatrix SymMatrix::from_data(int p, const double* raw) {
    SymMatrix m(p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double a = raw[static_cast<size_t>(i) * p + j];
            const double b = raw[static_cast<size_t>(j) * p + i];
            if (!std::isfinite(a) || !std::isfinite(b))
                throw NonFiniteEntry("non-finite entry at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
            m.set(i, j, 0.5 * (a + b));
        }
    }
    return m;
}

SymMatrix SymMatrix::validated(int p, const double* raw, double rel_tol) {
    double max_abs = 0.0;
    double max_asym = 0.0;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            const double a = raw[static_cast<size_t>(i) * p + j];
            if (!std::isfinite(a))
                throw NonFiniteEntry("non-finite entry at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
            max_abs = std::max(max_abs, std::fabs(a));
            max_asym = std::max(max_asym, std::fabs(a - raw[static_cast<size_t>(j) * p + i]));
        }
    }
    if (max_asym > rel_tol * std::max(1.0, max_abs))
        throw AsymmetricInput("matrix asymmetry " + std::to_string(max_asym) +
                              " exceeds tolerance");
    return from_data(p, raw);
}

void SymMatrix::symmetrize() {
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < i; ++j)
            set(i, j, 0.5 * ((*this)(i, j) + (*this)(j, i)));
}

bool SymMatrix::is_symmetric_exact() const {
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < i; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool SymMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace glinf
