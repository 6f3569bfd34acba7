#pragma once

#include "bjq/fft.hpp"
#include "bjq/grid.hpp"
#include "bjq/ncpoly.hpp"
#include "bjq/operator_matrix.hpp"

#include <map>

namespace bjq {

inline OperatorMatrix build_position(const GridSpec& grid) {
    Eigen::VectorXcd d(grid.size());
    for (int i = 0; i < grid.size(); ++i) d[i] = grid.q(i);
    return {grid, d.asDiagonal()};
}

// Spectral −iħ d/dq: FFT, multiply by ħk (Nyquist mode at +N/2), inverse FFT.
inline OperatorMatrix build_momentum(const GridSpec& grid) {
    const int n = grid.size();
    Eigen::MatrixXcd m(n, n);
    for (int c = 0; c < n; ++c) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e[c] = 1.0;
        Eigen::VectorXcd f = fft(e);
        for (int j = 0; j < n; ++j) f[j] *= grid.p_fft(j);
        m.col(c) = ifft(f);
    }
    return {grid, m};
}

// Substitutes the grid q̂, p̂ into every word and sums with ħ = grid.hbar().
inline OperatorMatrix realize(const NCPolynomial& poly, const GridSpec& grid) {
    const int n = grid.size();
    const OperatorMatrix qm = build_position(grid);
    const OperatorMatrix pm = build_momentum(grid);
    Eigen::VectorXd qdiag(n);
    for (int i = 0; i < n; ++i) qdiag[i] = grid.q(i);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [word, c] : poly.terms()) {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
        for (std::size_t k = word.size(); k-- > 0;) {
            if (word[k] == Letter::Q)
                acc = qdiag.asDiagonal() * acc;
            else
                acc = pm.entries() * acc;
        }
        out += c.evaluate(grid.hbar()) * acc;
    }
    return {grid, out};
}

}  // namespace bjq
