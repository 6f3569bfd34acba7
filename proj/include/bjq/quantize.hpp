#pragma once

#include "bjq/classical.hpp"
#include "bjq/errors.hpp"
#include "bjq/ncpoly.hpp"
#include "bjq/quadrature.hpp"

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <variant>

namespace bjq {

// Exact rational τ with 0 ≤ τ ≤ 1.
class TauParameter {
public:
    explicit TauParameter(Rational value) : value_(std::move(value)) {
        if (value_ < 0 || value_ > 1) throw ValidationError("tau must lie in [0, 1], got " + to_string(value_));
    }
    const Rational& value() const { return value_; }

private:
    Rational value_;
};

struct BornJordan {};
struct Weyl {};
struct Tau {
    TauParameter tau;
};
using Rule = std::variant<BornJordan, Weyl, Tau>;

namespace detail {

// p^a q^r p^b
inline NCPolynomial sandwich(int a, int r, int b) {
    return NCPolynomial(Word::power(Letter::P, a) * Word::power(Letter::Q, r) * Word::power(Letter::P, b));
}

// q^a p^s q^b
inline NCPolynomial sandwich_q(int a, int s, int b) {
    return NCPolynomial(Word::power(Letter::Q, a) * Word::power(Letter::P, s) * Word::power(Letter::Q, b));
}

}  // namespace detail

// (1/(s+1)) Σ_ℓ p^{s−ℓ} q^r p^ℓ
inline NCPolynomial bj_quantize(const ClassicalMonomial& m) {
    NCPolynomial sum;
    for (int l = 0; l <= m.s; ++l) sum += detail::sandwich(m.s - l, m.r, l);
    return normal_order(sum * (m.coefficient * HbarScalar(Rational(1, m.s + 1))));
}

// (1/(r+1)) Σ_j q^{r−j} p^s q^j
inline NCPolynomial bj_quantize_qform(const ClassicalMonomial& m) {
    NCPolynomial sum;
    for (int j = 0; j <= m.r; ++j) sum += detail::sandwich_q(m.r - j, m.s, j);
    return normal_order(sum * (m.coefficient * HbarScalar(Rational(1, m.r + 1))));
}

// (1/2^s) Σ_ℓ C(s,ℓ) p^{s−ℓ} q^r p^ℓ
inline NCPolynomial weyl_quantize(const ClassicalMonomial& m) {
    NCPolynomial sum;
    for (int l = 0; l <= m.s; ++l) sum += detail::sandwich(m.s - l, m.r, l) * HbarScalar(binomial(m.s, l));
    return normal_order(sum * (m.coefficient * HbarScalar(Rational(1) / pow(Rational(2), m.s))));
}

// Σ_ℓ C(s,ℓ) (1−τ)^ℓ τ^{s−ℓ} p^{s−ℓ} q^r p^ℓ
inline NCPolynomial tau_quantize(const ClassicalMonomial& m, const TauParameter& tau) {
    const Rational& t = tau.value();
    NCPolynomial sum;
    for (int l = 0; l <= m.s; ++l) {
        const Rational w = binomial(m.s, l) * pow(1 - t, l) * pow(t, m.s - l);
        sum += detail::sandwich(m.s - l, m.r, l) * HbarScalar(w);
    }
    return normal_order(sum * m.coefficient);
}

// ∫₀¹ of the τ-rule, integrating each coefficient polynomial in τ term by term.
inline NCPolynomial bj_from_tau_average(const ClassicalMonomial& m) {
    NCPolynomial sum;
    for (int l = 0; l <= m.s; ++l) {
        // C(s,ℓ) (1−τ)^ℓ τ^{s−ℓ} = C(s,ℓ) Σ_j C(ℓ,j) (−1)^j τ^{s−ℓ+j}
        Rational integral = 0;
        for (int j = 0; j <= l; ++j) {
            const Rational term = binomial(l, j) / Rational(m.s - l + j + 1);
            integral += (j % 2 == 0) ? term : Rational(-term);
        }
        sum += detail::sandwich(m.s - l, m.r, l) * HbarScalar(binomial(m.s, l) * integral);
    }
    return normal_order(sum * m.coefficient);
}

// Floating-point image of a polynomial: (word, ħ power) → coefficient.
using NumericNCPolynomial = std::map<std::pair<Word, int>, std::complex<double>>;

inline NumericNCPolynomial to_numeric(const NCPolynomial& poly) {
    NumericNCPolynomial out;
    for (const auto& [w, c] : poly.terms()) {
        const auto& coeffs = c.coefficients();
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (!coeffs[k].is_zero()) out[{w, static_cast<int>(k)}] = coeffs[k].to_complex();
    }
    return out;
}

// τ-average by Gauss–Legendre quadrature in floating point.
inline NumericNCPolynomial bj_from_tau_quadrature(const ClassicalMonomial& m, int order = 16) {
    std::vector<NumericNCPolynomial> orderings;
    for (int l = 0; l <= m.s; ++l) orderings.push_back(to_numeric(normal_order(detail::sandwich(m.s - l, m.r, l) * m.coefficient)));
    NumericNCPolynomial out;
    for (const GaussNode& node : gauss_legendre(order)) {
        for (int l = 0; l <= m.s; ++l) {
            const double w = node.weight * to_double(binomial(m.s, l)) * std::pow(node.one_minus_tau, l) *
                             std::pow(node.tau, m.s - l);
            for (const auto& [key, c] : orderings[static_cast<std::size_t>(l)]) out[key] += w * c;
        }
    }
    return out;
}

// Largest coefficient-wise deviation between two numeric polynomials.
inline double max_coefficient_difference(const NumericNCPolynomial& a, const NumericNCPolynomial& b) {
    double worst = 0.0;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        worst = std::max(worst, std::abs(v - (it == b.end() ? std::complex<double>() : it->second)));
    }
    for (const auto& [k, v] : b)
        if (!a.count(k)) worst = std::max(worst, std::abs(v));
    return worst;
}

inline NCPolynomial quantize(const ClassicalMonomial& m, const Rule& rule) {
    return std::visit(
        [&m](const auto& r) -> NCPolynomial {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, BornJordan>)
                return bj_quantize(m);
            else if constexpr (std::is_same_v<R, Weyl>)
                return weyl_quantize(m);
            else
                return tau_quantize(m, r.tau);
        },
        rule);
}

inline NCPolynomial quantize_polynomial(const ClassicalPolynomial& poly, const Rule& rule) {
    NCPolynomial out;
    for (const auto& [key, c] : poly.terms()) out += quantize(ClassicalMonomial(key.first, key.second, c), rule);
    return out;
}

// BJ(P) − Weyl(P), normal-ordered.
inline NCPolynomial bj_weyl_gap(const ClassicalPolynomial& poly) {
    return quantize_polynomial(poly, BornJordan{}) - quantize_polynomial(poly, Weyl{});
}

struct MotionResiduals {
    NCPolynomial residual_q;
    NCPolynomial residual_p;

    bool both_zero() const { return residual_q.is_zero() && residual_p.is_zero(); }
};

// [H_BJ, q] − (−iħ)·BJ(∂H/∂p) and [H_BJ, p] − (iħ)·BJ(∂H/∂q).
inline MotionResiduals check_motion_identities(const ClassicalMonomial& m) {
    const ClassicalPolynomial h(m);
    const NCPolynomial hbj = bj_quantize(m);
    const HbarScalar i_hbar = HbarScalar::hbar(1, ComplexRational::i());
    const NCPolynomial dq_side = quantize_polynomial(h.derivative_p(), BornJordan{}) * (-i_hbar);
    const NCPolynomial dp_side = quantize_polynomial(h.derivative_q(), BornJordan{}) * i_hbar;
    return {commutator(hbj, NCPolynomial::q()) - dq_side, commutator(hbj, NCPolynomial::p()) - dp_side};
}

// Lowest-degree monomial p^s q^r (s, r ≤ max_power) whose BJ−Weyl gap is not a multiple of 1.
inline std::optional<ClassicalMonomial> find_noncentral_monomial(int max_power = 4) {
    std::optional<ClassicalMonomial> best;
    for (int total = 0; total <= 2 * max_power && !best; ++total)
        for (int s = 0; s <= std::min(total, max_power) && !best; ++s) {
            const int r = total - s;
            if (r > max_power) continue;
            const ClassicalMonomial m(s, r);
            if (!(bj_quantize(m) - weyl_quantize(m)).is_central()) best = m;
        }
    return best;
}

}  // namespace bjq
