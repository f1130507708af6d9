#include "glinf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "glinf/errors.hpp"

namespace glinf {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

bool parse_cell(const std::string& cell, double& out) {
    const char* begin = cell.c_str();
    const char* end = begin + cell.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
    if (begin == end) return false;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool blank_line(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

DataMatrix parse_samples(std::istream& in, const std::string& source_name) {
    DataMatrix m;
    std::string line;
    int line_no = 0;
    bool first_data_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_line(line)) continue;
        const auto cells = split_csv_line(line);

        if (first_data_row) {
            // Header auto-detection: a first row with any non-numeric cell
            // is treated as a header and skipped.
            bool numeric = true;
            double v;
            for (const auto& c : cells)
                if (!parse_cell(c, v)) {
                    numeric = false;
                    break;
                }
            if (!numeric && m.rows == 0 && m.cols == 0) {
                m.cols = static_cast<int>(cells.size());
                first_data_row = false;
                continue;
            }
            m.cols = static_cast<int>(cells.size());
            first_data_row = false;
        }

        if (static_cast<int>(cells.size()) != m.cols)
            throw RaggedRows(source_name + ":" + std::to_string(line_no) + ": row has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(m.cols));
        for (int j = 0; j < m.cols; ++j) {
            double v;
            if (!parse_cell(cells[j], v) || !std::isfinite(v))
                throw NonNumericCell(source_name + ":" + std::to_string(line_no) + ":" +
                                         std::to_string(j + 1) + ": non-numeric cell '" +
                                         cells[j] + "'",
                                     line_no, j + 1);
            m.values.push_back(v);
        }
        ++m.rows;
    }
    if (m.rows == 0) throw EmptyFile(source_name + ": no data rows");
    return m;
}

DataMatrix load_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EmptyFile(path + ": cannot open file");
    return parse_samples(in, path);
}

SymMatrix load_covariance(const std::string& path) {
    const DataMatrix m = load_samples(path);
    if (m.rows != m.cols)
        throw DimensionError(path + ": covariance must be square, got " + std::to_string(m.rows) +
                             "x" + std::to_string(m.cols));
    return SymMatrix::validated(m.rows, m.values.data());
}

SymMatrix sample_covariance(const DataMatrix& data, int ddof) {
    const int n = data.rows;
    const int p = data.cols;
    if (n <= ddof) throw InvalidArgument("sample_covariance requires n > ddof");

    std::vector<double> mean(p, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) mean[j] += data(i, j);
    for (int j = 0; j < p; ++j) mean[j] /= n;

    std::vector<double> acc(static_cast<size_t>(p) * p, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j) {
            const double dj = data(i, j) - mean[j];
            for (int k = j; k < p; ++k)
                acc[static_cast<size_t>(j) * p + k] += dj * (data(i, k) - mean[k]);
        }
    const double scale = 1.0 / (n - ddof);
    for (int j = 0; j < p; ++j)
        for (int k = j; k < p; ++k) {
            acc[static_cast<size_t>(j) * p + k] *= scale;
            acc[static_cast<size_t>(k) * p + j] = acc[static_cast<size_t>(j) * p + k];
        }
    return SymMatrix::from_data(p, acc.data());
}

void to_json(nlohmann::json& j, const SymMatrix& m) {
    j = nlohmann::json{{"p", m.order()},
                       {"entries", std::vector<double>(m.data(), m.data() + m.size())}};
}

void from_json(const nlohmann::json& j, SymMatrix& m) {
    const int p = j.at("p").get<int>();
    const auto entries = j.at("entries").get<std::vector<double>>();
    if (entries.size() != static_cast<size_t>(p) * p)
        throw DimensionError("entry count does not match order");
    m = SymMatrix::from_data(p, entries.data());
}

void to_json(nlohmann::json& j, const ProblemSpec& spec) {
    j = nlohmann::json{{"s", spec.s}, {"gamma", spec.gamma}, {"lambda", spec.lambda}};
}

void from_json(const nlohmann::json& j, ProblemSpec& spec) {
    spec = new_problem(j.at("s").get<SymMatrix>(), j.at("gamma").get<double>(),
                       j.at("lambda").get<double>());
}

void to_json(nlohmann::json& j, const SolverConfig& c) {
    j = nlohmann::json{{"rho0", c.rho0},
                       {"doubling_interval", c.doubling_interval},
                       {"rho_max", c.rho_max},
                       {"epsilon", c.epsilon},
                       {"max_iters", c.max_iters},
                       {"trace", c.trace},
                       {"strict", c.strict}};
}

void from_json(const nlohmann::json& j, SolverConfig& c) {
    j.at("rho0").get_to(c.rho0);
    j.at("doubling_interval").get_to(c.doubling_interval);
    j.at("rho_max").get_to(c.rho_max);
    j.at("epsilon").get_to(c.epsilon);
    j.at("max_iters").get_to(c.max_iters);
    j.at("trace").get_to(c.trace);
    j.at("strict").get_to(c.strict);
    c.validate();
}

void to_json(nlohmann::json& j, const Diagnostics& d) {
    j = nlohmann::json{{"objective", d.objective},
                       {"aug_lagrangian", d.aug_lagrangian},
                       {"primal_residual", d.primal_residual},
                       {"dual_change", d.dual_change},
                       {"constraint_violation", d.constraint_violation},
                       {"min_eigenvalue", d.min_eigenvalue},
                       {"kkt_stationarity", d.kkt_stationarity},
                       {"rho", d.rho},
                       {"iter", d.iter}};
}

void from_json(const nlohmann::json& j, Diagnostics& d) {
    j.at("objective").get_to(d.objective);
    j.at("aug_lagrangian").get_to(d.aug_lagrangian);
    j.at("primal_residual").get_to(d.primal_residual);
    j.at("dual_change").get_to(d.dual_change);
    j.at("constraint_violation").get_to(d.constraint_violation);
    j.at("min_eigenvalue").get_to(d.min_eigenvalue);
    j.at("kkt_stationarity").get_to(d.kkt_stationarity);
    j.at("rho").get_to(d.rho);
    j.at("iter").get_to(d.iter);
}

nlohmann::json result_document(const SolveResult& result) {
    const Diagnostics& d = result.final_diagnostics;
    return nlohmann::json{{"p", result.theta_star.order()},
                          {"theta", std::vector<double>(result.theta_star.data(),
                                                        result.theta_star.data() +
                                                            result.theta_star.size())},
                          {"termination", to_string(result.termination)},
                          {"iters", result.iters_used},
                          {"objective", d.objective},
                          {"primal_residual", d.primal_residual},
                          {"dual_change", d.dual_change},
                          {"constraint_violation", d.constraint_violation},
                          {"min_eigenvalue", d.min_eigenvalue},
                          {"kkt_stationarity", d.kkt_stationarity}};
}

std::string result_csv(const SolveResult& result) {
    const int p = result.theta_star.order();
    std::string out;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (j) out += ',';
            out += fmt_double(result.theta_star(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_trace_csv(std::ostream& out, const std::vector<Diagnostics>& trace) {
    out << kTraceHeader << '\n';
    for (const Diagnostics& d : trace) {
        out << d.iter << ',' << fmt_double(d.rho) << ',' << fmt_double(d.objective) << ','
            << fmt_double(d.aug_lagrangian) << ',' << fmt_double(d.primal_residual) << ','
            << fmt_double(d.dual_change) << ',' << fmt_double(d.constraint_violation) << ','
            << fmt_double(d.min_eigenvalue) << ',' << fmt_double(d.kkt_stationarity) << '\n';
    }
}

}  // namespace glinf
