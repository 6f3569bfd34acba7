#pragma once

#include "bjq/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace bjq {

// Periodic position grid on [−L, L) with N points and the conjugate Fourier momentum grid.
class GridSpec {
public:
    GridSpec(int n, double half_width, double hbar) : n_(n), l_(half_width), hbar_(hbar) {
        if (n < 16 || (n & (n - 1)) != 0) throw ValidationError("grid size must be a power of two >= 16, got " + std::to_string(n));
        if (!(half_width > 0.0) || !std::isfinite(half_width)) throw ValidationError("grid half-width must be positive");
        if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ValidationError("hbar must be positive");
    }

    static GridSpec desk() { return {128, 8.0, 1.0}; }

    int size() const { return n_; }
    double half_width() const { return l_; }
    double hbar() const { return hbar_; }

    double dq() const { return 2.0 * l_ / n_; }
    double dp() const { return std::numbers::pi * hbar_ / l_; }

    double q(int i) const { return -l_ + dq() * i; }

    // Integer momentum label of FFT bin j, wrapped to (−N/2, N/2].
    int fft_mode(int j) const { return j > n_ / 2 ? j - n_ : j; }
    double p_fft(int j) const { return dp() * fft_mode(j); }

    // Ascending momentum axis used by phase-space tables: column j ↔ mode j − N/2 + 1.
    int sorted_mode(int j) const { return j - n_ / 2 + 1; }
    double p_sorted(int j) const { return dp() * sorted_mode(j); }

    std::vector<double> q_values() const {
        std::vector<double> out(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = q(i);
        return out;
    }
    std::vector<double> p_values_fft() const {
        std::vector<double> out(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = p_fft(j);
        return out;
    }
    std::vector<double> p_values_sorted() const {
        std::vector<double> out(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = p_sorted(j);
        return out;
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    int n_;
    double l_;
    double hbar_;
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (!(a == b)) throw GridMismatchError();
}

}  // namespace bjq
