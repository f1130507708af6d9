#pragma once

#include <stdexcept>
#include <string>

namespace glinf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AsymmetricInput : Error { using Error::Error; };
struct NegativeParameter : Error { using Error::Error; };
struct NonFiniteEntry : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct NumericalBreakdown : Error {
    NumericalBreakdown(const std::string& msg, int iter)
        : Error(msg), iteration(iter) {}
    int iteration;
};
struct NonPositiveDiagonal : Error { using Error::Error; };
struct ConstraintActive : Error { using Error::Error; };

// CSV / CLI input errors
struct RaggedRows : Error { using Error::Error; };
struct NonNumericCell : Error {
    NonNumericCell(const std::string& msg, int r, int c)
        : Error(msg), row(r), col(c) {}
    int row, col;
};
struct EmptyFile : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

}  // namespace glinf
