#pragma once

#include "bjq/rational.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace bjq {

// Polynomial in ħ with exact complex-rational coefficients; coefficient k multiplies ħ^k.
class HbarScalar {
public:
    HbarScalar() = default;
    HbarScalar(ComplexRational c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }
    HbarScalar(Rational r) : HbarScalar(ComplexRational(std::move(r))) {}
    HbarScalar(int r) : HbarScalar(ComplexRational(r)) {}

    static HbarScalar hbar(int power = 1, ComplexRational c = 1) {
        HbarScalar out;
        if (c.is_zero()) return out;
        out.coeffs_.assign(static_cast<std::size_t>(power) + 1, ComplexRational());
        out.coeffs_.back() = std::move(c);
        return out;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Highest ħ power present; −1 for zero.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<ComplexRational>& coefficients() const { return coeffs_; }
    ComplexRational coefficient(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : ComplexRational();
    }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_real() const {
        for (const auto& c : coeffs_)
            if (!c.is_real()) return false;
        return true;
    }

    HbarScalar conj() const {
        HbarScalar out = *this;
        for (auto& c : out.coeffs_) c = c.conj();
        return out;
    }

    std::complex<double> evaluate(double hbar) const {
        std::complex<double> acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * hbar + it->to_complex();
        return acc;
    }

    HbarScalar& operator+=(const HbarScalar& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    HbarScalar& operator-=(const HbarScalar& o) { return *this += -o; }
    HbarScalar& operator*=(const HbarScalar& o) { return *this = *this * o; }

    friend HbarScalar operator+(HbarScalar a, const HbarScalar& b) { return a += b; }
    friend HbarScalar operator-(HbarScalar a, const HbarScalar& b) { return a -= b; }
    friend HbarScalar operator-(HbarScalar a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend HbarScalar operator*(const HbarScalar& a, const HbarScalar& b) {
        HbarScalar out;
        if (a.is_zero() || b.is_zero()) return out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, ComplexRational());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        out.trim();
        return out;
    }
    friend bool operator==(const HbarScalar& a, const HbarScalar& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<ComplexRational> coeffs_;
};

}  // namespace bjq
