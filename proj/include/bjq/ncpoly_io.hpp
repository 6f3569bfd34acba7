#pragma once

#include "bjq/classical.hpp"
#include "bjq/expression.hpp"
#include "bjq/ncpoly.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace bjq {

namespace detail {

// One printed term: coefficient, then factors joined by '*'.
struct TermText {
    bool negative = false;
    std::string body;
};

inline TermText format_term(const ComplexRational& c, std::vector<std::string> factors) {
    TermText t;
    std::string coeff;
    if (c.is_real() || c.real() == 0) {
        const bool imaginary = !c.is_real();
        const Rational mag = imaginary ? c.imag() : c.real();
        t.negative = mag < 0;
        const Rational a = t.negative ? Rational(-mag) : mag;
        if (a != 1) coeff = to_string(a);
        if (imaginary) coeff = coeff.empty() ? "i" : coeff + "*i";
    } else {
        const Rational& im = c.imag();
        coeff = "(" + to_string(c.real()) + (im < 0 ? "-" : "+") + (im == 1 || im == -1 ? std::string() : to_string(im < 0 ? Rational(-im) : im) + "*") + "i)";
    }
    if (!coeff.empty()) factors.insert(factors.begin(), coeff);
    if (factors.empty()) factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) t.body += (k ? "*" : "") + factors[k];
    return t;
}

inline std::string join_terms(const std::vector<TermText>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == 0)
            out += terms[k].negative ? "-" : "";
        else
            out += terms[k].negative ? " - " : " + ";
        out += terms[k].body;
    }
    return out;
}

inline std::string hbar_factor(int k) { return k == 1 ? "h" : "h^" + std::to_string(k); }

// Runs of equal letters separated by spaces: "q^2 p q".
inline std::string word_text(const Word& w) {
    std::string out;
    std::size_t k = 0;
    while (k < w.size()) {
        std::size_t run = 1;
        while (k + run < w.size() && w[k + run] == w[k]) ++run;
        if (!out.empty()) out += ' ';
        out += w[k] == Letter::Q ? 'q' : 'p';
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

}  // namespace detail

// Terms by word length (longest first), then lexicographic with q < p, then ascending ħ power.
inline std::string to_string(const NCPolynomial& poly) {
    std::vector<detail::TermText> terms;
    for (const auto& [w, c] : poly.terms()) {
        const auto& coeffs = c.coefficients();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            std::vector<std::string> factors;
            if (k > 0) factors.push_back(detail::hbar_factor(static_cast<int>(k)));
            if (!w.empty()) factors.push_back(detail::word_text(w));
            terms.push_back(detail::format_term(coeffs[k], std::move(factors)));
        }
    }
    return detail::join_terms(terms);
}

// Terms by total degree (highest first), then by p power (highest first): "3/2*p^2*q^2 - q^4".
inline std::string to_string(const ClassicalPolynomial& poly) {
    std::vector<std::pair<ClassicalPolynomial::Key, HbarScalar>> sorted(poly.terms().begin(), poly.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second;
        const int db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    auto power_text = [](char v, int e) { return e == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(e); };
    std::vector<detail::TermText> terms;
    for (const auto& [key, c] : sorted) {
        const auto& coeffs = c.coefficients();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k].is_zero()) continue;
            std::vector<std::string> factors;
            if (k > 0) factors.push_back(detail::hbar_factor(static_cast<int>(k)));
            if (key.first > 0) factors.push_back(power_text('p', key.first));
            if (key.second > 0) factors.push_back(power_text('q', key.second));
            terms.push_back(detail::format_term(coeffs[k], std::move(factors)));
        }
    }
    return detail::join_terms(terms);
}

inline std::ostream& operator<<(std::ostream& os, const NCPolynomial& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const ClassicalPolynomial& p) { return os << to_string(p); }

}  // namespace bjq
