#pragma once

#include "bjq/errors.hpp"
#include "bjq/grid.hpp"
#include "bjq/state.hpp"

#include <Eigen/Dense>

#include <complex>

namespace bjq {

// Dense position-space matrix; entry (a, b) ≈ Δq·⟨q_a|A|q_b⟩ with b the input index.
class OperatorMatrix {
public:
    OperatorMatrix(GridSpec grid, Eigen::MatrixXcd entries) : grid_(grid), entries_(std::move(entries)) {
        if (entries_.rows() != grid_.size() || entries_.cols() != grid_.size())
            throw ValidationError("matrix shape does not match grid size");
    }

    static OperatorMatrix identity(const GridSpec& grid) {
        return {grid, Eigen::MatrixXcd::Identity(grid.size(), grid.size())};
    }
    static OperatorMatrix zero(const GridSpec& grid) { return {grid, Eigen::MatrixXcd::Zero(grid.size(), grid.size())}; }

    const GridSpec& grid() const { return grid_; }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    std::complex<double> operator()(int a, int b) const { return entries_(a, b); }

    // max |M − M†|
    double hermitian_residual() const { return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff(); }
    double max_abs() const { return entries_.cwiseAbs().maxCoeff(); }
    // Hermitian relative to the largest entry.
    bool is_hermitian(double relative_tolerance = 1e-10) const {
        return hermitian_residual() <= relative_tolerance * std::max(max_abs(), 1e-300);
    }
    double frobenius_norm() const { return entries_.norm(); }

    OperatorMatrix adjoint() const { return {grid_, entries_.adjoint()}; }

    StateVector apply(const StateVector& psi) const {
        require_same_grid(grid_, psi.grid());
        return StateVector(grid_, entries_ * psi.amplitudes());
    }

    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
        require_same_grid(a.grid_, b.grid_);
        return {a.grid_, a.entries_ + b.entries_};
    }
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
        require_same_grid(a.grid_, b.grid_);
        return {a.grid_, a.entries_ - b.entries_};
    }
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
        require_same_grid(a.grid_, b.grid_);
        return {a.grid_, a.entries_ * b.entries_};
    }
    friend OperatorMatrix operator*(std::complex<double> s, const OperatorMatrix& a) { return {a.grid_, s * a.entries_}; }

private:
    GridSpec grid_;
    Eigen::MatrixXcd entries_;
};

// ‖A − B‖_F / ‖B‖_F
inline double relative_frobenius(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_grid(a.grid(), b.grid());
    return (a.entries() - b.entries()).norm() / b.entries().norm();
}

// ⟨φ|M|ψ⟩ with Δq weighting.
inline std::complex<double> matrix_element(const StateVector& phi, const OperatorMatrix& m, const StateVector& psi) {
    require_same_grid(phi.grid(), m.grid());
    require_same_grid(psi.grid(), m.grid());
    return phi.grid().dq() * phi.amplitudes().dot(m.entries() * psi.amplitudes());
}

inline std::complex<double> expectation(const OperatorMatrix& m, const StateVector& psi) {
    return matrix_element(psi, m, psi) / inner(psi, psi);
}

}  // namespace bjq
