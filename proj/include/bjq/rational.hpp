#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace bjq {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    BigInt c = 1;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    return Rational(c);
}

inline Rational factorial(int n) {
    BigInt f = 1;
    for (int j = 2; j <= n; ++j) f *= j;
    return Rational(f);
}

inline Rational pow(const Rational& base, int e) {
    Rational out(1);
    for (int j = 0; j < e; ++j) out *= base;
    return out;
}

// Exact Gaussian rational a + b·i.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(Rational re) : re_(std::move(re)) {}
    ComplexRational(int re) : re_(re) {}
    ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    ComplexRational conj() const { return {re_, -im_}; }

    std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    // Throws std::domain_error on division by zero.
    ComplexRational& operator/=(const ComplexRational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        Rational den = o.re_ * o.re_ + o.im_ * o.im_;
        *this *= o.conj();
        re_ /= den;
        im_ /= den;
        return *this;
    }

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

}  // namespace bjq
