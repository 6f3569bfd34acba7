#pragma once

#include "bjq/dynamics.hpp"
#include "bjq/errors.hpp"
#include "bjq/grid.hpp"
#include "bjq/ncpoly_io.hpp"
#include "bjq/operator_matrix.hpp"
#include "bjq/phase_space_function.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace bjq {

using json = nlohmann::json;

inline json grid_to_json(const GridSpec& g) { return {{"N", g.size()}, {"L", g.half_width()}, {"hbar", g.hbar()}}; }

inline GridSpec grid_from_json(const json& j) {
    try {
        return {j.at("N").get<int>(), j.at("L").get<double>(), j.at("hbar").get<double>()};
    } catch (const json::exception& e) {
        throw ValidationError(std::string("invalid grid description: ") + e.what());
    }
}

namespace detail {

inline json complex_table_to_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Eigen::MatrixXcd complex_table_from_json(const json& rows, int n) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ValidationError("table row count does not match grid");
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != n) throw ValidationError("table column count does not match grid");
        for (int c = 0; c < n; ++c) {
            const json& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
                throw ValidationError("table cells must be [re, im] pairs");
            m(r, c) = {cell[0].get<double>(), cell[1].get<double>()};
        }
    }
    return m;
}

inline std::string csv_cell(std::complex<double> z) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << '"' << z.real() << ',' << z.imag() << '"';
    return os.str();
}

inline std::string csv_number(double x) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return os.str();
}

}  // namespace detail

inline json to_json(const OperatorMatrix& m) {
    return {{"grid", grid_to_json(m.grid())}, {"rows", detail::complex_table_to_json(m.entries())}};
}

inline OperatorMatrix operator_from_json(const json& j) {
    if (!j.is_object() || !j.contains("grid") || !j.contains("rows")) throw ValidationError("operator JSON needs 'grid' and 'rows'");
    const GridSpec g = grid_from_json(j.at("grid"));
    return {g, detail::complex_table_from_json(j.at("rows"), g.size())};
}

inline json to_json(const PhaseSpaceFunction& f) {
    json q = json::array(), p = json::array();
    for (int i = 0; i < f.grid().size(); ++i) q.push_back(f.grid().q(i));
    for (int j = 0; j < f.grid().size(); ++j) p.push_back(f.grid().p_sorted(j));
    return {{"grid", grid_to_json(f.grid())}, {"q", q}, {"p", p}, {"rows", detail::complex_table_to_json(f.values())}};
}

inline PhaseSpaceFunction phase_space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("grid") || !j.contains("rows")) throw ValidationError("phase-space JSON needs 'grid' and 'rows'");
    const GridSpec g = grid_from_json(j.at("grid"));
    return {g, detail::complex_table_from_json(j.at("rows"), g.size())};
}

// Row-major, one quoted "re,im" cell per entry.
inline void write_csv(std::ostream& os, const OperatorMatrix& m) {
    for (Eigen::Index r = 0; r < m.entries().rows(); ++r) {
        for (Eigen::Index c = 0; c < m.entries().cols(); ++c) os << (c ? "," : "") << detail::csv_cell(m.entries()(r, c));
        os << '\n';
    }
}

// Header row of q values; first column holds p; cell (p_j, q_i) = f(q_i, p_j).
inline void write_csv(std::ostream& os, const PhaseSpaceFunction& f) {
    const GridSpec& g = f.grid();
    os << "p\\q";
    for (int i = 0; i < g.size(); ++i) os << ',' << detail::csv_number(g.q(i));
    os << '\n';
    for (int j = 0; j < g.size(); ++j) {
        os << detail::csv_number(g.p_sorted(j));
        for (int i = 0; i < g.size(); ++i) os << ',' << detail::csv_cell(f(i, j));
        os << '\n';
    }
}

inline void write_csv(std::ostream& os, const DivergenceReport& r) {
    os << "t,exp_q_bj,exp_q_weyl,abs_gap,fidelity,phase\n";
    for (const auto& s : r.samples)
        os << detail::csv_number(s.t) << ',' << detail::csv_number(s.exp_q_bj) << ',' << detail::csv_number(s.exp_q_weyl) << ','
           << detail::csv_number(s.abs_gap) << ',' << detail::csv_number(s.fidelity) << ',' << detail::csv_number(s.phase)
           << '\n';
}

inline json to_json(const DivergenceReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"t", s.t},
                           {"exp_q_bj", s.exp_q_bj},
                           {"exp_q_weyl", s.exp_q_weyl},
                           {"abs_gap", s.abs_gap},
                           {"fidelity", s.fidelity},
                           {"phase", s.phase}});
    json gap = {{"classification", r.gap.central ? "central" : "non-central"},
                {"symbolic_gap", to_string(r.gap.symbolic_gap)},
                {"state_residual", r.gap.state_residual}};
    if (r.gap.central) gap["central_value"] = {r.gap.central_value.real(), r.gap.central_value.imag()};
    return {{"gap", gap}, {"max_abs_gap", r.max_abs_gap()}, {"warnings", r.warnings}, {"samples", samples}};
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace bjq
