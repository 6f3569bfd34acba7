#pragma once

#include "bjq/errors.hpp"
#include "bjq/grid.hpp"
#include "bjq/operator_matrix.hpp"
#include "bjq/quadrature.hpp"
#include "bjq/symbol.hpp"

#include <cmath>
#include <complex>
#include <exception>
#include <numbers>
#include <thread>
#include <vector>

namespace bjq {

struct KernelOptions {
    int quadrature_order = 16;
    unsigned threads = 1;
};

namespace detail {

inline void check_symbol_grid(const SampledSymbol& a, const GridSpec& grid) {
    if (a.table_grid() && !(*a.table_grid() == grid)) throw GridMismatchError();
}

// M_ab = Σ_nodes w · (1/N) Σ_m e^{2πi m (a−b)/N} A((1−τ) q_a + τ q_b, p_m)
// Periodic symbols follow the shortest path around the box, x = q_a − τ·d·Δq with d the minimum-image
// separation; at d = −N/2 both directions are averaged.
inline OperatorMatrix mixed_point_kernel(const SampledSymbol& a, const GridSpec& grid, const std::vector<GaussNode>& nodes,
                                         unsigned threads) {
    check_symbol_grid(a, grid);
    const int n = grid.size();
    const bool torus = a.symbol_class() == SymbolClass::Periodic;
    const auto ps = grid.p_values_fft();
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) roots[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    // twiddle[d·N + j] = e^{2πi mode(j) d / N}
    std::vector<std::complex<double>> twiddle(static_cast<std::size_t>(n) * n);
    for (int d = 0; d < n; ++d)
        for (int j = 0; j < n; ++j) {
            const long idx = ((static_cast<long>(grid.fft_mode(j)) * d) % n + n) % n;
            twiddle[static_cast<std::size_t>(d) * n + j] = roots[static_cast<std::size_t>(idx)];
        }

    Eigen::MatrixXcd m(n, n);
    auto build_rows = [&](int row_begin, int row_end) {
        std::vector<std::complex<double>> vals(static_cast<std::size_t>(n));
        auto row_sum = [&](double x, const std::complex<double>* tw) {
            a.evaluate_row(x, ps, grid.hbar(), vals);
            std::complex<double> s = 0.0;
            for (int j = 0; j < n; ++j) {
                const std::complex<double> v = vals[static_cast<std::size_t>(j)];
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw NumericalError("symbol produced a non-finite sample");
                s += tw[j] * v;
            }
            return s;
        };
        for (int r = row_begin; r < row_end; ++r) {
            const double qa = grid.q(r);
            for (int c = 0; c < n; ++c) {
                const double qb = grid.q(c);
                const std::complex<double>* tw = &twiddle[static_cast<std::size_t>(((r - c) % n + n) % n) * n];
                std::complex<double> acc = 0.0;
                if (!torus) {
                    for (const GaussNode& node : nodes) acc += node.weight * row_sum(node.one_minus_tau * qa + node.tau * qb, tw);
                } else {
                    const int d = static_cast<int>(((r - c) % n + n + n / 2) % n) - n / 2;
                    for (const GaussNode& node : nodes) {
                        std::complex<double> s = row_sum(qa - node.tau * d * grid.dq(), tw);
                        if (d == -n / 2) s = 0.5 * (s + row_sum(qa + node.tau * (n / 2) * grid.dq(), tw));
                        acc += node.weight * s;
                    }
                }
                m(r, c) = acc / static_cast<double>(n);
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers == 1) {
        build_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const int begin = static_cast<int>(static_cast<long>(n) * w / workers);
            const int end = static_cast<int>(static_cast<long>(n) * (w + 1) / workers);
            pool.emplace_back([&, w, begin, end] {
                try {
                    build_rows(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return {grid, m};
}

}  // namespace detail

// τ-rule kernel: symbol evaluated at (1−τ)·q_out + τ·q_in.
inline OperatorMatrix tau_kernel_quantize(const SampledSymbol& a, double tau, const GridSpec& grid, unsigned threads = 1) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw ValidationError("tau must lie in [0, 1]");
    return detail::mixed_point_kernel(a, grid, {GaussNode{tau, 1.0 - tau, 1.0}}, threads);
}

inline OperatorMatrix weyl_kernel_quantize(const SampledSymbol& a, const GridSpec& grid, unsigned threads = 1) {
    return tau_kernel_quantize(a, 0.5, grid, threads);
}

// τ-average of the τ kernels by Gauss–Legendre quadrature.
inline OperatorMatrix bj_kernel_quantize(const SampledSymbol& a, const GridSpec& grid, int quadrature_order = 16,
                                         unsigned threads = 1) {
    return detail::mixed_point_kernel(a, grid, gauss_legendre(quadrature_order), threads);
}

}  // namespace bjq
