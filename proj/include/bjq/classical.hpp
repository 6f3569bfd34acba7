#pragma once

#include "bjq/hbar_scalar.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace bjq {

// coefficient · p^s q^r
struct ClassicalMonomial {
    int s = 0;
    int r = 0;
    HbarScalar coefficient = 1;

    ClassicalMonomial(int s_, int r_, HbarScalar c = 1) : s(s_), r(r_), coefficient(std::move(c)) {
        if (s < 0 || r < 0) throw std::invalid_argument("monomial exponents must be non-negative");
    }
};

// Commutative polynomial in (p, q); keys are (s, r) for p^s q^r. Zero coefficients are never stored.
class ClassicalPolynomial {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, HbarScalar>;

    ClassicalPolynomial() = default;
    ClassicalPolynomial(HbarScalar c) { add_term(0, 0, std::move(c)); }
    ClassicalPolynomial(const ClassicalMonomial& m) { add_term(m.s, m.r, m.coefficient); }

    static ClassicalPolynomial q() { return ClassicalMonomial(0, 1); }
    static ClassicalPolynomial p() { return ClassicalMonomial(1, 0); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int s, int r, const HbarScalar& c) {
        if (s < 0 || r < 0) throw std::invalid_argument("monomial exponents must be non-negative");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(Key{s, r}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    HbarScalar coefficient(int s, int r) const {
        auto it = terms_.find(Key{s, r});
        return it == terms_.end() ? HbarScalar() : it->second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }

    ClassicalPolynomial derivative_p() const {
        ClassicalPolynomial out;
        for (const auto& [k, c] : terms_)
            if (k.first > 0) out.add_term(k.first - 1, k.second, c * HbarScalar(k.first));
        return out;
    }
    ClassicalPolynomial derivative_q() const {
        ClassicalPolynomial out;
        for (const auto& [k, c] : terms_)
            if (k.second > 0) out.add_term(k.first, k.second - 1, c * HbarScalar(k.second));
        return out;
    }

    ClassicalPolynomial& operator+=(const ClassicalPolynomial& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    ClassicalPolynomial& operator-=(const ClassicalPolynomial& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend ClassicalPolynomial operator+(ClassicalPolynomial a, const ClassicalPolynomial& b) { return a += b; }
    friend ClassicalPolynomial operator-(ClassicalPolynomial a, const ClassicalPolynomial& b) { return a -= b; }
    friend ClassicalPolynomial operator*(const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
        ClassicalPolynomial out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }
    friend bool operator==(const ClassicalPolynomial& a, const ClassicalPolynomial& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

}  // namespace bjq
