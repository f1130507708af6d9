#pragma once

#include <cstddef>
#include <vector>

#include "glinf/errors.hpp"

namespace glinf {

/// Dense symmetric p x p matrix, row-major storage.
///
/// Symmetry is exact: entry (i,j) is bit-equal to (j,i) after construction
/// and after every public operation. Inputs that are only symmetric up to
/// rounding must go through `from_data` (which averages with the transpose)
/// or `validated` (which enforces a relative tolerance first).
class SymMatrix {
public:
    SymMatrix() = default;

    /// Zero matrix of the given order. Throws DimensionError if p < 1.
    explicit SymMatrix(int p);

    static SymMatrix identity(int p);

    /// Builds from a row-major buffer of p*p values, averaging with the
    /// transpose so the result is exactly symmetric. Throws NonFiniteEntry.
    static SymMatrix from_data(int p, const double* raw);

    /// Builds from untrusted input: rejects entries whose asymmetry exceeds
    /// rel_tol * max(1, max|A_ij|), then symmetrizes exactly.
    /// Throws AsymmetricInput, NonFiniteEntry, DimensionError.
    static SymMatrix validated(int p, const double* raw, double rel_tol = 1e-12);

    int order() const { return p_; }

    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * p_ + j]; }

    /// Sets both (i,j) and (j,i).
    void set(int i, int j, double v) {
        data_[static_cast<size_t>(i) * p_ + j] = v;
        data_[static_cast<size_t>(j) * p_ + i] = v;
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    size_t size() const { return data_.size(); }

    /// Re-establishes exact symmetry by averaging with the transpose.
    void symmetrize();

    bool is_symmetric_exact() const;
    bool all_finite() const;

    bool operator==(const SymMatrix& other) const = default;

private:
    int p_ = 0;
    std::vector<double> data_;
};

}  // namespace glinf
