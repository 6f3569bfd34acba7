#pragma once

#include "bjq/basic_operators.hpp"
#include "bjq/classical.hpp"
#include "bjq/errors.hpp"
#include "bjq/kernel.hpp"
#include "bjq/operator_matrix.hpp"
#include "bjq/quantize.hpp"
#include "bjq/state.hpp"
#include "bjq/symbol.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace bjq {

// U(t) = exp(−iHt/ħ) from the eigendecomposition of a Hermitian H.
class Propagator {
public:
    explicit Propagator(OperatorMatrix hamiltonian, double hermitian_tolerance = 1e-10) : h_(std::move(hamiltonian)) {
        if (!h_.is_hermitian(hermitian_tolerance)) throw ValidationError("Hamiltonian is not Hermitian");
        const Eigen::MatrixXcd sym = 0.5 * (h_.entries() + h_.entries().adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
        if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
        values_ = solver.eigenvalues();
        vectors_ = solver.eigenvectors();
    }

    const GridSpec& grid() const { return h_.grid(); }
    const OperatorMatrix& hamiltonian() const { return h_; }
    const Eigen::VectorXd& eigenvalues() const { return values_; }
    const Eigen::MatrixXcd& eigenvectors() const { return vectors_; }

    Eigen::VectorXcd phases(double t) const {
        Eigen::VectorXcd out(values_.size());
        for (Eigen::Index k = 0; k < values_.size(); ++k) out[k] = std::polar(1.0, -values_[k] * t / grid().hbar());
        return out;
    }

    OperatorMatrix unitary(double t) const {
        if (t == 0.0) return OperatorMatrix::identity(grid());
        return {grid(), vectors_ * phases(t).asDiagonal() * vectors_.adjoint()};
    }

    // ‖U U† − I‖_max
    double unitarity_residual(double t) const {
        const Eigen::MatrixXcd u = unitary(t).entries();
        return (u * u.adjoint() - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    }

    // Ã = V† A V
    Eigen::MatrixXcd to_eigenbasis(const OperatorMatrix& a) const {
        require_same_grid(a.grid(), grid());
        return vectors_.adjoint() * a.entries() * vectors_;
    }

    // Ã_H(t)_{jk} = e^{i(λ_j − λ_k)t/ħ} Ã_{jk}
    Eigen::MatrixXcd heisenberg_in_eigenbasis(const Eigen::MatrixXcd& a_eig, double t) const {
        const Eigen::VectorXcd ph = phases(t);
        return ph.conjugate().asDiagonal() * a_eig * ph.asDiagonal();
    }

private:
    OperatorMatrix h_;
    Eigen::VectorXd values_;
    Eigen::MatrixXcd vectors_;
};

inline StateVector evolve_state(const Propagator& u, const StateVector& psi0, double t) {
    require_same_grid(u.grid(), psi0.grid());
    if (t == 0.0) return psi0;
    const Eigen::MatrixXcd& v = u.eigenvectors();
    return StateVector(u.grid(), v * (u.phases(t).asDiagonal() * (v.adjoint() * psi0.amplitudes())));
}

// A_H(t) = U(t)† A U(t)
inline OperatorMatrix heisenberg_observable(const Propagator& u, const OperatorMatrix& a, double t) {
    require_same_grid(u.grid(), a.grid());
    if (t == 0.0) return a;
    const Eigen::MatrixXcd& v = u.eigenvectors();
    return {u.grid(), v * u.heisenberg_in_eigenbasis(u.to_eigenbasis(a), t) * v.adjoint()};
}

// ‖iħ (A_H(t+δ) − A_H(t−δ))/(2δ) − [A_H(t), H]‖_max
inline double check_heisenberg_equation(const Propagator& u, const OperatorMatrix& a, double t, double delta) {
    require_same_grid(u.grid(), a.grid());
    if (!(delta > 0.0)) throw ValidationError("finite-difference step must be positive");
    const Eigen::MatrixXcd a_eig = u.to_eigenbasis(a);
    const Eigen::MatrixXcd plus = u.heisenberg_in_eigenbasis(a_eig, t + delta);
    const Eigen::MatrixXcd minus = u.heisenberg_in_eigenbasis(a_eig, t - delta);
    const Eigen::MatrixXcd now = u.heisenberg_in_eigenbasis(a_eig, t);
    const Eigen::MatrixXcd lambda = u.eigenvalues().cast<std::complex<double>>().asDiagonal();
    const std::complex<double> i_hbar(0.0, u.grid().hbar());
    const Eigen::MatrixXcd residual = i_hbar * (plus - minus) / (2.0 * delta) - (now * lambda - lambda * now);
    const Eigen::MatrixXcd& v = u.eigenvectors();
    return (v * residual * v.adjoint()).cwiseAbs().maxCoeff();
}

// ‖iħ (ψ(t+δ) − ψ(t−δ))/(2δ) − Hψ(t)‖ with Δq weighting.
inline double schrodinger_residual(const Propagator& u, const StateVector& psi0, double t, double delta) {
    if (!(delta > 0.0)) throw ValidationError("finite-difference step must be positive");
    const Eigen::VectorXcd plus = evolve_state(u, psi0, t + delta).amplitudes();
    const Eigen::VectorXcd minus = evolve_state(u, psi0, t - delta).amplitudes();
    const Eigen::VectorXcd now = evolve_state(u, psi0, t).amplitudes();
    const std::complex<double> i_hbar(0.0, u.grid().hbar());
    const Eigen::VectorXcd r = i_hbar * (plus - minus) / (2.0 * delta) - u.hamiltonian().entries() * now;
    return std::sqrt(u.grid().dq()) * r.norm();
}

// Schrödinger state at t next to the fixed Heisenberg ket ψ_H = ψ_S(0).
struct PictureState {
    StateVector schrodinger;
    StateVector heisenberg;
};

inline PictureState picture_state(const Propagator& u, const StateVector& psi0, double t) {
    return {evolve_state(u, psi0, t), psi0};
}

struct DivergenceSample {
    double t = 0.0;
    double exp_q_bj = 0.0;
    double exp_q_weyl = 0.0;
    double abs_gap = 0.0;
    double fidelity = 0.0;  // |⟨ψ_W|ψ_BJ⟩|
    double phase = 0.0;     // arg⟨ψ_W|ψ_BJ⟩
};

struct GapClassification {
    NCPolynomial symbolic_gap;                // BJ − Weyl, normal-ordered
    bool central = false;                     // symbolic gap is a multiple of 1
    std::complex<double> central_value;       // that multiple at the grid ħ
    double state_residual = 0.0;              // ‖(H_BJ − H_W − c)ψ₀‖ / ‖ψ₀‖
};

struct DivergenceReport {
    std::vector<DivergenceSample> samples;
    GapClassification gap;
    std::vector<std::string> warnings;

    double max_abs_gap() const {
        double m = 0.0;
        for (const auto& s : samples) m = std::max(m, s.abs_gap);
        return m;
    }
};

// Evolves ψ₀ under the Born–Jordan and Weyl kernel quantizations of `symbol` and compares them.
inline DivergenceReport divergence_experiment(const ClassicalPolynomial& symbol, const StateVector& psi0, double horizon,
                                              int samples, const KernelOptions& options = {}) {
    if (samples < 2) throw ValidationError("divergence experiment needs at least 2 samples");
    if (!(horizon >= 0.0) || !std::isfinite(horizon)) throw ValidationError("horizon must be non-negative");
    const GridSpec& grid = psi0.grid();
    DivergenceReport report;

    bool has_mixed = false;
    for (const auto& [k, c] : symbol.terms()) has_mixed = has_mixed || (k.first >= 2 && k.second >= 2);
    if (!has_mixed) report.warnings.push_back("symbol has no monomial p^s q^r with s >= 2 and r >= 2; divergence may vanish");

    report.gap.symbolic_gap = bj_weyl_gap(symbol);
    report.gap.central = report.gap.symbolic_gap.is_central();
    report.gap.central_value =
        report.gap.central ? report.gap.symbolic_gap.coefficient(Word()).evaluate(grid.hbar()) : std::complex<double>();

    const SampledSymbol a = SampledSymbol::from_polynomial(symbol);
    const OperatorMatrix h_bj = bj_kernel_quantize(a, grid, options.quadrature_order, options.threads);
    const OperatorMatrix h_w = weyl_kernel_quantize(a, grid, options.threads);
    const Eigen::VectorXcd gap_psi =
        (h_bj.entries() - h_w.entries()) * psi0.amplitudes() - report.gap.central_value * psi0.amplitudes();
    report.gap.state_residual = std::sqrt(grid.dq()) * gap_psi.norm() / psi0.norm();
    if (report.gap.central && report.gap.state_residual > 1e-8)
        report.warnings.push_back("numeric gap deviates from the central prediction on the initial state");

    const Propagator u_bj(h_bj), u_w(h_w);
    const OperatorMatrix q = build_position(grid);
    for (int k = 0; k < samples; ++k) {
        const double t = horizon * k / (samples - 1);
        const StateVector bj = evolve_state(u_bj, psi0, t);
        const StateVector w = evolve_state(u_w, psi0, t);
        const std::complex<double> overlap = inner(w, bj) / (w.norm() * bj.norm());
        DivergenceSample s;
        s.t = t;
        s.exp_q_bj = expectation(q, bj).real();
        s.exp_q_weyl = expectation(q, w).real();
        s.abs_gap = std::abs(s.exp_q_bj - s.exp_q_weyl);
        s.fidelity = std::abs(overlap);
        s.phase = std::arg(overlap);
        report.samples.push_back(s);
    }
    return report;
}

}  // namespace bjq
