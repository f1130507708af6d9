#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "glinf/types.hpp"

namespace glinf {

struct DataMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;  // row-major

    double operator()(int i, int j) const { return values[static_cast<size_t>(i) * cols + j]; }
};

/// Reads a CSV of observations (one per row). A non-numeric first row is
/// treated as a header and skipped.
/// Throws RaggedRows, NonNumericCell, EmptyFile.
DataMatrix load_samples(const std::string& path);
DataMatrix parse_samples(std::istream& in, const std::string& source_name);

/// Reads a square covariance CSV; must be symmetric within 1e-12 relative
/// tolerance. Throws the CSV errors plus AsymmetricInput, DimensionError.
SymMatrix load_covariance(const std::string& path);

/// S = (1/(n - ddof)) * sum (x_i - mean)(x_i - mean)^T, explicitly
/// symmetrized. The default is the 1/n convention (ddof = 0); n = 1 with
/// ddof = 0 yields the zero matrix. Throws InvalidArgument if n <= ddof.
SymMatrix sample_covariance(const DataMatrix& data, int ddof = 0);

// JSON serialization for the record types. Matrices are stored as row-major
// arrays with an explicit order field; doubles round-trip bit-exactly.
void to_json(nlohmann::json& j, const SymMatrix& m);
void from_json(const nlohmann::json& j, SymMatrix& m);
void to_json(nlohmann::json& j, const ProblemSpec& spec);
void from_json(const nlohmann::json& j, ProblemSpec& spec);
void to_json(nlohmann::json& j, const SolverConfig& c);
void from_json(const nlohmann::json& j, SolverConfig& c);
void to_json(nlohmann::json& j, const Diagnostics& d);
void from_json(const nlohmann::json& j, Diagnostics& d);

/// The result document written by the CLI: p, theta (row-major), termination,
/// iters, and the final diagnostics fields.
nlohmann::json result_document(const SolveResult& result);

/// theta_star as a CSV matrix.
std::string result_csv(const SolveResult& result);

constexpr const char* kTraceHeader =
    "iter,rho,objective,aug_lagrangian,primal_residual,dual_change,"
    "constraint_violation,min_eigenvalue,kkt_stationarity";

void write_trace_csv(std::ostream& out, const std::vector<Diagnostics>& trace);

}  // namespace glinf
