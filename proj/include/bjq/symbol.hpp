#pragma once

#include "bjq/classical.hpp"
#include "bjq/errors.hpp"
#include "bjq/expression.hpp"
#include "bjq/interpolation.hpp"
#include "bjq/phase_space_function.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace bjq {

// Declared behaviour of a symbol in p, used to judge whether the periodic discretization applies.
enum class SymbolClass { Polynomial, Decaying, Periodic, Tabulated };

// Classical observable A(q, p), evaluated a row at a time: fixed q, a vector of p values.
class SampledSymbol {
public:
    using RowFunction =
        std::function<void(double q, std::span<const double> p, double hbar, std::span<std::complex<double>> out)>;

    SampledSymbol(RowFunction f, SymbolClass cls, std::optional<GridSpec> table_grid = std::nullopt)
        : row_(std::move(f)), class_(cls), table_grid_(table_grid) {}

    static SampledSymbol from_function(std::function<std::complex<double>(double q, double p)> f,
                                       SymbolClass cls = SymbolClass::Decaying) {
        return SampledSymbol(
            [f = std::move(f)](double q, std::span<const double> p, double, std::span<std::complex<double>> out) {
                for (std::size_t k = 0; k < p.size(); ++k) out[k] = f(q, p[k]);
            },
            cls);
    }

    static SampledSymbol from_hbar_function(std::function<std::complex<double>(double q, double p, double hbar)> f,
                                            SymbolClass cls = SymbolClass::Decaying) {
        return SampledSymbol(
            [f = std::move(f)](double q, std::span<const double> p, double hbar, std::span<std::complex<double>> out) {
                for (std::size_t k = 0; k < p.size(); ++k) out[k] = f(q, p[k], hbar);
            },
            cls);
    }

    static SampledSymbol from_polynomial(const ClassicalPolynomial& poly) {
        struct Term {
            int s, r;
            HbarScalar c;
        };
        std::vector<Term> terms;
        for (const auto& [k, c] : poly.terms()) terms.push_back({k.first, k.second, c});
        return SampledSymbol(
            [terms](double q, std::span<const double> p, double hbar, std::span<std::complex<double>> out) {
                std::fill(out.begin(), out.end(), std::complex<double>());
                for (const Term& t : terms) {
                    const std::complex<double> cq = t.c.evaluate(hbar) * std::pow(q, t.r);
                    for (std::size_t k = 0; k < p.size(); ++k) out[k] += cq * std::pow(p[k], t.s);
                }
            },
            SymbolClass::Polynomial);
    }

    // Polynomial text is read exactly; anything else (cos, exp, gauss_damped, ...) numerically.
    static SampledSymbol from_expression(std::string_view text) {
        auto expr = std::make_shared<const Expr>(parse_expression(text));
        try {
            return from_polynomial(to_classical(*expr));
        } catch (const ParseError&) {
        }
        detail::validate_numeric(*expr);
        return SampledSymbol(
            [expr](double q, std::span<const double> p, double hbar, std::span<std::complex<double>> out) {
                const auto row = detail::eval_row(*expr, q, p, hbar);
                std::copy(row.begin(), row.end(), out.begin());
            },
            SymbolClass::Decaying);
    }

    // Table symbol: exact on grid momenta, clipped 16-point Lagrange interpolation in q.
    static SampledSymbol from_table(const PhaseSpaceFunction& table) {
        auto data = std::make_shared<const PhaseSpaceFunction>(table);
        const GridSpec g = table.grid();
        return SampledSymbol(
            [data, g](double q, std::span<const double> p, double, std::span<std::complex<double>> out) {
                const double x = (q + g.half_width()) / g.dq();
                if (x < -1e-9 || x > g.size() - 1 + 1e-9) throw NumericalError("table symbol evaluated outside the grid");
                thread_local std::vector<double> w;
                const int start = lagrange_stencil(x, 0, g.size() - 1, 16, w);
                for (std::size_t k = 0; k < p.size(); ++k) {
                    const double mf = p[k] / g.dp();
                    const long m = std::lround(mf);
                    if (std::abs(mf - static_cast<double>(m)) > 1e-9) throw NumericalError("table symbol evaluated off the momentum grid");
                    const int j = static_cast<int>(m) + g.size() / 2 - 1;
                    if (j < 0 || j >= g.size()) throw NumericalError("table symbol evaluated off the momentum grid");
                    std::complex<double> acc = 0.0;
                    for (std::size_t n = 0; n < w.size(); ++n) acc += w[n] * data->values()(start + static_cast<int>(n), j);
                    out[k] = acc;
                }
            },
            SymbolClass::Tabulated, g);
    }

    void evaluate_row(double q, std::span<const double> p, double hbar, std::span<std::complex<double>> out) const {
        row_(q, p, hbar, out);
    }

    std::complex<double> operator()(double q, double p, double hbar) const {
        std::complex<double> v;
        row_(q, std::span<const double>(&p, 1), hbar, std::span<std::complex<double>>(&v, 1));
        return v;
    }

    SymbolClass symbol_class() const { return class_; }
    const std::optional<GridSpec>& table_grid() const { return table_grid_; }

    // Symbol sampled on the phase-space grid.
    PhaseSpaceFunction tabulate(const GridSpec& grid) const {
        Eigen::MatrixXcd v(grid.size(), grid.size());
        const auto ps = grid.p_values_sorted();
        std::vector<std::complex<double>> row(ps.size());
        for (int i = 0; i < grid.size(); ++i) {
            evaluate_row(grid.q(i), ps, grid.hbar(), row);
            for (int j = 0; j < grid.size(); ++j) v(i, j) = row[static_cast<std::size_t>(j)];
        }
        return {grid, v};
    }

private:
    RowFunction row_;
    SymbolClass class_;
    std::optional<GridSpec> table_grid_;
};

}  // namespace bjq
