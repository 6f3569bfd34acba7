#pragma once

#include "bjq/errors.hpp"
#include "bjq/fft.hpp"
#include "bjq/grid.hpp"
#include "bjq/interpolation.hpp"
#include "bjq/kernel.hpp"
#include "bjq/operator_matrix.hpp"
#include "bjq/phase_space_function.hpp"
#include "bjq/state.hpp"
#include "bjq/symbol.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace bjq {

enum class KernelRule { Weyl, BornJordan };

namespace detail {

// Band-limited interpolation onto the half-step grid (2N points), Nyquist bin split evenly.
inline Eigen::VectorXcd upsample(const Eigen::VectorXcd& f) {
    const Eigen::Index n = f.size();
    const Eigen::VectorXcd spectrum = fft(f);
    Eigen::VectorXcd wide = Eigen::VectorXcd::Zero(2 * n);
    for (Eigen::Index k = 0; k < n / 2; ++k) wide[k] = spectrum[k];
    for (Eigen::Index k = n / 2 + 1; k < n; ++k) wide[k + n] = spectrum[k];
    wide[n / 2] = spectrum[n / 2] / 2.0;
    wide[2 * n - n / 2] = spectrum[n / 2] / 2.0;
    return ifft(wide) * 2.0;
}

inline std::vector<std::complex<double>> unit_roots(int n) {
    std::vector<std::complex<double>> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    return r;
}

inline std::size_t mod_index(long v, int n) { return static_cast<std::size_t>(((v % n) + n) % n); }

}  // namespace detail

// W(f, g)(q, p) = (1/2πħ) ∫ e^{−ipy/ħ} f(q + y/2) conj(g(q − y/2)) dy, so that
// ∬ A·W(f, g) dq dp = ⟨g|A_W|f⟩.
inline PhaseSpaceFunction cross_wigner(const StateVector& f, const StateVector& g) {
    require_same_grid(f.grid(), g.grid());
    const GridSpec& grid = f.grid();
    const int n = grid.size();
    const Eigen::VectorXcd fu = detail::upsample(f.amplitudes());
    const Eigen::VectorXcd gu = detail::upsample(g.amplitudes());
    const auto roots = detail::unit_roots(n);
    const double scale = grid.dq() / (2.0 * std::numbers::pi * grid.hbar());
    Eigen::MatrixXcd w(n, n);
    std::vector<std::complex<double>> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto product = [&](int k) {
            return fu[static_cast<Eigen::Index>(detail::mod_index(2 * i + k, 2 * n))] *
                   std::conj(gu[static_cast<Eigen::Index>(detail::mod_index(2 * i - k, 2 * n))]);
        };
        for (int k = -n / 2 + 1; k < n / 2; ++k) v[static_cast<std::size_t>(k + n / 2)] = product(k);
        v[0] = 0.5 * (product(-n / 2) + product(n / 2));  // split the separation ±N/2 so W(f, f) stays real
        for (int j = 0; j < n; ++j) {
            const long m = grid.sorted_mode(j);
            std::complex<double> acc = 0.0;
            for (int k = -n / 2; k < n / 2; ++k)
                acc += std::conj(roots[detail::mod_index(m * k, n)]) * v[static_cast<std::size_t>(k + n / 2)];
            w(i, j) = acc * scale;
        }
    }
    return {grid, w};
}

// B(q_i, p) = Σ_d e^{−ipdΔq/ħ} M(i + d/2, i − d/2) over separations d ∈ [−N/2, N/2).
// Odd d sit between grid points and are interpolated along the diagonal; pairs leaving the box contribute 0.
inline PhaseSpaceFunction weyl_symbol_of(const OperatorMatrix& op) {
    const GridSpec& grid = op.grid();
    const int n = grid.size();
    const Eigen::MatrixXcd& m = op.entries();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);  // h(d + N/2, i)
    std::vector<double> w;
    for (int d = -n / 2; d < n / 2; ++d) {
        const int lo = std::max(0, d);
        const int hi = std::min(n - 1, n - 1 + d);
        for (int i = 0; i < n; ++i) {
            const double a = i + d / 2.0;
            if (a < lo || a > hi) continue;
            std::complex<double> value;
            if (d % 2 == 0) {
                const int ai = i + d / 2;
                value = m(ai, ai - d);
            } else {
                const int start = lagrange_stencil(a, lo, hi, 16, w);
                for (std::size_t k = 0; k < w.size(); ++k) {
                    const int row = start + static_cast<int>(k);
                    value += w[k] * m(row, row - d);
                }
            }
            h(d + n / 2, i) = value;
        }
    }
    const auto roots = detail::unit_roots(n);
    Eigen::MatrixXcd phase(n, n);  // phase(j, d + N/2) = e^{−2πi m_j d / N}
    for (int j = 0; j < n; ++j)
        for (int d = -n / 2; d < n / 2; ++d)
            phase(j, d + n / 2) = std::conj(roots[detail::mod_index(static_cast<long>(grid.sorted_mode(j)) * d, n)]);
    return {grid, (phase * h).transpose()};
}

// Θ = sinc(ζη/2ħ) on the dual grid of the (q, p) table, in FFT bin order.
// ζ_k = mode(k)·Δp is dual to q, η_l = mode(l)·Δq is dual to p, and ζη/2ħ = π·mode(k)·mode(l)/N.
class ThetaMultiplier {
public:
    explicit ThetaMultiplier(const GridSpec& grid) : grid_(grid), values_(grid.size(), grid.size()) {
        const int n = grid.size();
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) values_(k, l) = sinc_ratio(static_cast<long>(grid.fft_mode(k)) * grid.fft_mode(l), n);
    }

    // sin(π t/N)/(π t/N) with exact zeros at nonzero multiples of N.
    static double sinc_ratio(long t, int n) {
        if (t == 0) return 1.0;
        const long r = ((t % n) + n) % n;
        if (r == 0) return 0.0;
        const double x = std::numbers::pi * static_cast<double>(t) / n;
        const double s = std::sin(std::numbers::pi * static_cast<double>(r) / n);
        const long turns = (t - r) / n;  // sin(πt/N) = (−1)^turns sin(πr/N)
        return ((turns % 2 == 0) ? s : -s) / x;
    }

    const GridSpec& grid() const { return grid_; }
    const Eigen::MatrixXd& values() const { return values_; }
    double operator()(int k, int l) const { return values_(k, l); }
    double zeta(int k) const { return grid_.fft_mode(k) * grid_.dp(); }
    double eta(int l) const { return grid_.fft_mode(l) * grid_.dq(); }

private:
    GridSpec grid_;
    Eigen::MatrixXd values_;
};

// B with 𝓕B = Θ·𝓕A.
inline PhaseSpaceFunction apply_fafb(const PhaseSpaceFunction& a) {
    const ThetaMultiplier theta(a.grid());
    Eigen::MatrixXcd spectrum = fft2(a.values());
    spectrum.array() *= theta.values().array().cast<std::complex<double>>();
    return {a.grid(), ifft2(spectrum)};
}

// Modified cross-Wigner transform W_BJ(f, g): same Θ multiplier, applied to W(f, g).
inline PhaseSpaceFunction cross_wigner_bj(const StateVector& f, const StateVector& g) {
    return apply_fafb(cross_wigner(f, g));
}

inline void require_non_orthogonal(const StateVector& phi, const StateVector& psi, std::complex<double> overlap) {
    if (std::abs(overlap) <= 1e-10 * phi.norm() * psi.norm()) throw NumericalError("near-orthogonal pre/post states");
}

// ⟨φ|M|ψ⟩ / ⟨φ|ψ⟩ for pre-selected ψ and post-selected φ.
inline std::complex<double> weak_value(const OperatorMatrix& m, const StateVector& phi, const StateVector& psi) {
    const std::complex<double> overlap = inner(phi, psi);
    require_non_orthogonal(phi, psi, overlap);
    return matrix_element(phi, m, psi) / overlap;
}

// ∬ A·ρ dq dp with ρ = W(ψ, φ)/⟨φ|ψ⟩ (Weyl) or its Θ-filtered counterpart (BJ).
inline std::complex<double> weak_value_phase_space(const PhaseSpaceFunction& a, const StateVector& phi,
                                                   const StateVector& psi, KernelRule rule) {
    require_same_grid(a.grid(), phi.grid());
    const std::complex<double> overlap = inner(phi, psi);
    require_non_orthogonal(phi, psi, overlap);
    const PhaseSpaceFunction w = rule == KernelRule::Weyl ? cross_wigner(psi, phi) : cross_wigner_bj(psi, phi);
    return pairing(a, w) / overlap;
}

inline OperatorMatrix kernel_quantize(const SampledSymbol& a, const GridSpec& grid, KernelRule rule,
                                      const KernelOptions& options = {}) {
    return rule == KernelRule::Weyl ? weyl_kernel_quantize(a, grid, options.threads)
                                    : bj_kernel_quantize(a, grid, options.quadrature_order, options.threads);
}

// ‖A_BJ‖_F / ‖A_W‖_F, with 0/0 read as 0.
inline double bj_weyl_norm_ratio(const SampledSymbol& a, const GridSpec& grid, const KernelOptions& options = {}) {
    const double bj = bj_kernel_quantize(a, grid, options.quadrature_order, options.threads).frobenius_norm();
    const double weyl = weyl_kernel_quantize(a, grid, options.threads).frobenius_norm();
    if (weyl == 0.0) {
        if (bj == 0.0) return 0.0;
        throw NumericalError("Weyl operator vanishes while the Born-Jordan operator does not");
    }
    return bj / weyl;
}

struct DequantizationWitness {
    SampledSymbol symbol;
    double q0 = 0.0;
    double p0 = 0.0;
    int q_steps = 0;  // q0 = q_steps·Δq
    int p_steps = 0;  // p0 = p_steps·Δp
    double theta = 0.0;
    double norm_bj = 0.0;
    double norm_weyl = 0.0;
    double ratio = 0.0;
};

// A = cos((p0 q − q0 p)/ħ) with q0·p0 = `multiple`·2πħ and (q0, p0) on the dual grid.
// multiple = 1 lands on the zero set of Θ; multiple = 1/2 gives Θ = 2/π.
inline DequantizationWitness dequantization_witness(const GridSpec& grid, double multiple = 1.0, int quadrature_order = 16,
                                                    unsigned threads = 1) {
    if (!(multiple > 0.0)) throw ValidationError("zero-set multiple must be positive");
    const int n = grid.size();
    const double target_q0 = std::sqrt(2.0 * std::numbers::pi * grid.hbar() * multiple);
    int best_n = 0, best_k = 0;
    double best_score = 0.0;
    for (int qn = 1; qn <= n / 2; ++qn) {
        const double kf = n * multiple / qn;  // q0 p0 = qn·k·2πħ/N
        const long k = std::lround(kf);
        if (std::abs(kf - static_cast<double>(k)) > 1e-12 || k < 1 || k > n / 2) continue;
        const double score = std::abs(std::log(qn * grid.dq() / target_q0));
        if (best_n == 0 || score < best_score) {
            best_n = qn;
            best_k = static_cast<int>(k);
            best_score = score;
        }
    }
    if (best_n == 0 || best_score > std::log(1.5))
        throw NumericalError("requested zero-set point is not representable on the dual grid");

    DequantizationWitness out{SampledSymbol::from_function([](double, double) { return std::complex<double>(); })};
    out.q_steps = best_n;
    out.p_steps = best_k;
    out.q0 = best_n * grid.dq();
    out.p0 = best_k * grid.dp();
    out.theta = ThetaMultiplier::sinc_ratio(static_cast<long>(best_n) * best_k, n);
    const double q0 = out.q0, p0 = out.p0;
    out.symbol = SampledSymbol::from_hbar_function(
        [q0, p0](double q, double p, double hbar) { return std::complex<double>(std::cos((p0 * q - q0 * p) / hbar)); },
        SymbolClass::Periodic);
    const KernelOptions options{quadrature_order, threads};
    out.norm_bj = bj_kernel_quantize(out.symbol, grid, options.quadrature_order, threads).frobenius_norm();
    out.norm_weyl = weyl_kernel_quantize(out.symbol, grid, threads).frobenius_norm();
    out.ratio = out.norm_weyl == 0.0 ? 0.0 : out.norm_bj / out.norm_weyl;
    return out;
}

}  // namespace bjq
