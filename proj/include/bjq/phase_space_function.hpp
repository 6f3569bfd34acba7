#pragma once

#include "bjq/errors.hpp"
#include "bjq/grid.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>

namespace bjq {

// Complex table over (q_i, p_j): rows follow the position grid, columns the ascending momentum axis.
class PhaseSpaceFunction {
public:
    PhaseSpaceFunction(GridSpec grid, Eigen::MatrixXcd values) : grid_(grid), values_(std::move(values)) {
        if (values_.rows() != grid_.size() || values_.cols() != grid_.size())
            throw ValidationError("phase-space table shape does not match grid size");
    }

    static PhaseSpaceFunction sample(const GridSpec& grid, const std::function<std::complex<double>(double, double)>& f) {
        Eigen::MatrixXcd v(grid.size(), grid.size());
        for (int i = 0; i < grid.size(); ++i)
            for (int j = 0; j < grid.size(); ++j) v(i, j) = f(grid.q(i), grid.p_sorted(j));
        return {grid, v};
    }

    const GridSpec& grid() const { return grid_; }
    const Eigen::MatrixXcd& values() const { return values_; }
    std::complex<double> operator()(int i, int j) const { return values_(i, j); }

    // ∬ f dq dp as a Riemann sum.
    std::complex<double> integral() const { return values_.sum() * grid_.dq() * grid_.dp(); }

    double max_imag() const { return values_.imag().cwiseAbs().maxCoeff(); }

    // ∬ f·g dq dp (bilinear, no conjugation).
    friend std::complex<double> pairing(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g) {
        require_same_grid(f.grid_, g.grid_);
        return f.values_.cwiseProduct(g.values_).sum() * f.grid_.dq() * f.grid_.dp();
    }

private:
    GridSpec grid_;
    Eigen::MatrixXcd values_;
};

}  // namespace bjq
