#pragma once

#include "bjq/errors.hpp"
#include "bjq/grid.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace bjq {

// Wavefunction samples on a grid with Δq-weighted norm.
class StateVector {
public:
    StateVector(GridSpec grid, Eigen::VectorXcd amplitudes) : grid_(grid), amplitudes_(std::move(amplitudes)) {
        if (amplitudes_.size() != grid_.size()) throw ValidationError("state length does not match grid size");
        if (!amplitudes_.allFinite()) throw NumericalError("state amplitudes must be finite");
        norm_ = std::sqrt(grid_.dq()) * amplitudes_.norm();
    }

    // Normalized e^{−(q−q0)²/(4σ²) + i p0 q/ħ}.
    static StateVector gaussian(const GridSpec& grid, double q0, double p0, double sigma) {
        if (!(sigma > 0.0)) throw ValidationError("Gaussian width must be positive");
        Eigen::VectorXcd v(grid.size());
        for (int i = 0; i < grid.size(); ++i) {
            const double x = grid.q(i);
            v[i] = std::exp(std::complex<double>(-(x - q0) * (x - q0) / (4.0 * sigma * sigma), p0 * x / grid.hbar()));
        }
        return StateVector(grid, v).normalized();
    }

    const GridSpec& grid() const { return grid_; }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    double norm() const { return norm_; }

    StateVector normalized() const {
        if (norm_ == 0.0) throw NumericalError("cannot normalize the zero state");
        return StateVector(grid_, amplitudes_ / norm_);
    }

    // Probability mass within `width` of either end of the box.
    double boundary_mass(double width) const {
        double mass = 0.0;
        for (int i = 0; i < grid_.size(); ++i) {
            const double x = grid_.q(i);
            if (x < -grid_.half_width() + width || x >= grid_.half_width() - width) mass += std::norm(amplitudes_[i]);
        }
        return mass * grid_.dq();
    }

private:
    GridSpec grid_;
    Eigen::VectorXcd amplitudes_;
    double norm_ = 0.0;
};

// ⟨a|b⟩ = Δq Σ conj(a) b
inline std::complex<double> inner(const StateVector& a, const StateVector& b) {
    require_same_grid(a.grid(), b.grid());
    return a.grid().dq() * a.amplitudes().dot(b.amplitudes());
}

}  // namespace bjq
