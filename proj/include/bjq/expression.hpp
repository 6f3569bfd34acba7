#pragma once

#include "bjq/classical.hpp"
#include "bjq/errors.hpp"
#include "bjq/ncpoly.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bjq {

// Parsed expression tree shared by the exact and numeric interpreters.
struct Expr {
    enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Div, Pow, Call };

    Kind kind = Kind::Number;
    Rational number{0};
    std::string name;
    std::vector<Expr> args;
    std::size_t position = 0;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr parse() {
        skip_space();
        if (at_end()) throw ParseError("empty expression", pos_);
        Expr e = parse_sum();
        skip_space();
        if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    static Expr node(Expr::Kind k, std::size_t pos, std::vector<Expr> args) {
        Expr e;
        e.kind = k;
        e.position = pos;
        e.args = std::move(args);
        return e;
    }

    Expr parse_sum() {
        Expr lhs = parse_product();
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            const std::size_t at = pos_++;
            Expr rhs = parse_product();
            lhs = node(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, at, {std::move(lhs), std::move(rhs)});
        }
    }

    bool starts_factor() const {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '(' || c == '_';
    }

    Expr parse_product() {
        Expr lhs = parse_unary();
        for (;;) {
            skip_space();
            const char c = peek();
            const std::size_t at = pos_;
            if (c == '*' || c == '/') {
                ++pos_;
                Expr rhs = parse_unary();
                lhs = node(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, at, {std::move(lhs), std::move(rhs)});
            } else if (starts_factor()) {
                Expr rhs = parse_power();
                lhs = node(Expr::Kind::Mul, at, {std::move(lhs), std::move(rhs)});
            } else {
                return lhs;
            }
        }
    }

    Expr parse_unary() {
        skip_space();
        const std::size_t at = pos_;
        if (peek() == '-') {
            ++pos_;
            return node(Expr::Kind::Neg, at, {parse_unary()});
        }
        if (peek() == '+') {
            ++pos_;
            return parse_unary();
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        skip_space();
        if (peek() != '^') return base;
        const std::size_t at = pos_++;
        skip_space();
        Expr exponent;
        if (peek() == '-') {
            const std::size_t neg_at = pos_++;
            exponent = node(Expr::Kind::Neg, neg_at, {parse_power()});
        } else {
            exponent = parse_power();
        }
        return node(Expr::Kind::Pow, at, {std::move(base), std::move(exponent)});
    }

    Expr parse_primary() {
        skip_space();
        const std::size_t at = pos_;
        if (at_end()) throw ParseError("unexpected end of expression", pos_);
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            skip_space();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) id += text_[pos_++];
            skip_space();
            if (peek() == '(') {
                ++pos_;
                Expr call = node(Expr::Kind::Call, at, {});
                call.name = id;
                skip_space();
                if (peek() != ')') {
                    for (;;) {
                        call.args.push_back(parse_sum());
                        skip_space();
                        if (peek() == ',') {
                            ++pos_;
                            continue;
                        }
                        break;
                    }
                }
                if (peek() != ')') throw ParseError("expected ')' after function arguments", pos_);
                ++pos_;
                return call;
            }
            Expr sym = node(Expr::Kind::Symbol, at, {});
            sym.name = id == "hbar" ? "h" : id;
            if (sym.name != "q" && sym.name != "p" && sym.name != "h" && sym.name != "i" && sym.name != "pi")
                throw ParseError("unknown identifier '" + id + "'", at);
            return sym;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    // Decimal literals are read exactly: 1.25e-2 → 1/80.
    Expr parse_number() {
        const std::size_t at = pos_;
        std::string digits;
        int frac_digits = 0;
        bool seen_dot = false;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
            if (peek() == '.') {
                if (seen_dot) throw ParseError("malformed number", pos_);
                seen_dot = true;
            } else {
                digits += peek();
                if (seen_dot) ++frac_digits;
            }
            ++pos_;
        }
        if (digits.empty()) throw ParseError("malformed number", at);
        long exponent = 0;
        if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < text_.size()) {
            std::size_t look = pos_ + 1;
            int sign = 1;
            if (text_[look] == '+' || text_[look] == '-') {
                sign = text_[look] == '-' ? -1 : 1;
                ++look;
            }
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                long e = 0;
                while (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                    e = e * 10 + (text_[look] - '0');
                    if (e > 400) throw ParseError("exponent too large", at);
                    ++look;
                }
                exponent = sign * e;
                pos_ = look;
            }
        }
        const std::size_t first = digits.find_first_not_of('0');
        Rational value{BigInt(first == std::string::npos ? std::string("0") : digits.substr(first))};
        const long shift = exponent - frac_digits;
        BigInt scale = 1;
        for (long k = 0; k < std::labs(shift); ++k) scale *= 10;
        value = shift >= 0 ? value * Rational(scale) : value / Rational(scale);
        Expr e = node(Expr::Kind::Number, at, {});
        e.number = value;
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline int exact_exponent(const Expr& e) {
    if (e.kind != Expr::Kind::Number || denominator(e.number) != 1 || e.number < 0 || e.number > 64)
        throw ParseError("exponent must be a non-negative integer literal", e.position);
    return static_cast<int>(e.number);
}

}  // namespace detail

inline Expr parse_expression(std::string_view text) { return detail::ExprParser(text).parse(); }

// Exact noncommutative reading: factor order is preserved, result is not normal-ordered.
inline NCPolynomial to_ncpolynomial(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return NCPolynomial(HbarScalar(e.number));
        case K::Symbol:
            if (e.name == "q") return NCPolynomial::q();
            if (e.name == "p") return NCPolynomial::p();
            if (e.name == "h") return NCPolynomial::hbar();
            if (e.name == "i") return NCPolynomial::i();
            throw ParseError("'" + e.name + "' is not allowed in a polynomial", e.position);
        case K::Neg: return -to_ncpolynomial(e.args[0]);
        case K::Add: return to_ncpolynomial(e.args[0]) + to_ncpolynomial(e.args[1]);
        case K::Sub: return to_ncpolynomial(e.args[0]) - to_ncpolynomial(e.args[1]);
        case K::Mul: return to_ncpolynomial(e.args[0]) * to_ncpolynomial(e.args[1]);
        case K::Div: {
            const NCPolynomial d = to_ncpolynomial(e.args[1]);
            const HbarScalar c = d.coefficient(Word());
            if (!d.is_central() || d.is_zero() || !c.is_constant())
                throw ParseError("division is only allowed by a nonzero numeric constant", e.position);
            return to_ncpolynomial(e.args[0]) * HbarScalar(ComplexRational(1) / c.coefficient(0));
        }
        case K::Pow: return power(to_ncpolynomial(e.args[0]), detail::exact_exponent(e.args[1]));
        case K::Call: throw ParseError("function '" + e.name + "' is not allowed in a polynomial", e.position);
    }
    throw ParseError("unsupported expression", e.position);
}

// Exact commutative reading.
inline ClassicalPolynomial to_classical(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return ClassicalPolynomial(HbarScalar(e.number));
        case K::Symbol:
            if (e.name == "q") return ClassicalPolynomial::q();
            if (e.name == "p") return ClassicalPolynomial::p();
            if (e.name == "h") return ClassicalPolynomial(HbarScalar::hbar());
            if (e.name == "i") return ClassicalPolynomial(HbarScalar(ComplexRational::i()));
            throw ParseError("'" + e.name + "' is not allowed in a polynomial", e.position);
        case K::Neg: return ClassicalPolynomial() - to_classical(e.args[0]);
        case K::Add: return to_classical(e.args[0]) + to_classical(e.args[1]);
        case K::Sub: return to_classical(e.args[0]) - to_classical(e.args[1]);
        case K::Mul: return to_classical(e.args[0]) * to_classical(e.args[1]);
        case K::Div: {
            const ClassicalPolynomial d = to_classical(e.args[1]);
            const HbarScalar c = d.coefficient(0, 0);
            if (d.terms().size() != 1 || c.is_zero() || !c.is_constant())
                throw ParseError("division is only allowed by a nonzero numeric constant", e.position);
            return to_classical(e.args[0]) * ClassicalPolynomial(HbarScalar(ComplexRational(1) / c.coefficient(0)));
        }
        case K::Pow: {
            const int n = detail::exact_exponent(e.args[1]);
            const ClassicalPolynomial base = to_classical(e.args[0]);
            ClassicalPolynomial out(HbarScalar(1));
            for (int k = 0; k < n; ++k) out = out * base;
            return out;
        }
        case K::Call: throw ParseError("function '" + e.name + "' is not allowed in a polynomial", e.position);
    }
    throw ParseError("unsupported expression", e.position);
}

inline NCPolynomial parse_ncpolynomial(std::string_view text) { return to_ncpolynomial(parse_expression(text)); }
inline ClassicalPolynomial parse_classical(std::string_view text) { return to_classical(parse_expression(text)); }

namespace detail {

using cplx = std::complex<double>;

inline void check_arity(const Expr& e, std::size_t n) {
    if (e.args.size() != n)
        throw ParseError("function '" + e.name + "' expects " + std::to_string(n) + " argument(s)", e.position);
}

// Evaluates e at (q, p_k) for every k; result has p.size() entries.
inline std::vector<cplx> eval_row(const Expr& e, double q, std::span<const double> p, double hbar) {
    using K = Expr::Kind;
    const std::size_t n = p.size();
    auto unary = [&](auto&& f) {
        std::vector<cplx> a = eval_row(e.args[0], q, p, hbar);
        for (auto& v : a) v = f(v);
        return a;
    };
    auto binary = [&](auto&& f) {
        std::vector<cplx> a = eval_row(e.args[0], q, p, hbar);
        const std::vector<cplx> b = eval_row(e.args[1], q, p, hbar);
        for (std::size_t k = 0; k < n; ++k) a[k] = f(a[k], b[k]);
        return a;
    };
    switch (e.kind) {
        case K::Number: return std::vector<cplx>(n, cplx(static_cast<double>(e.number), 0.0));
        case K::Symbol:
            if (e.name == "q") return std::vector<cplx>(n, cplx(q, 0.0));
            if (e.name == "p") return std::vector<cplx>(p.begin(), p.end());
            if (e.name == "h") return std::vector<cplx>(n, cplx(hbar, 0.0));
            if (e.name == "i") return std::vector<cplx>(n, cplx(0.0, 1.0));
            return std::vector<cplx>(n, cplx(std::acos(-1.0), 0.0));
        case K::Neg: return unary([](cplx v) { return -v; });
        case K::Add: return binary([](cplx a, cplx b) { return a + b; });
        case K::Sub: return binary([](cplx a, cplx b) { return a - b; });
        case K::Mul: return binary([](cplx a, cplx b) { return a * b; });
        case K::Div: return binary([](cplx a, cplx b) { return a / b; });
        case K::Pow: {
            const Expr& ex = e.args[1];
            if (ex.kind == K::Number && denominator(ex.number) == 1 && ex.number >= 0 && ex.number <= 64) {
                const int k = static_cast<int>(ex.number);
                return unary([k](cplx v) {
                    cplx out = 1.0;
                    for (int j = 0; j < k; ++j) out *= v;
                    return out;
                });
            }
            return binary([](cplx a, cplx b) { return std::pow(a, b); });
        }
        case K::Call: {
            if (e.name == "cos") { check_arity(e, 1); return unary([](cplx v) { return std::cos(v); }); }
            if (e.name == "sin") { check_arity(e, 1); return unary([](cplx v) { return std::sin(v); }); }
            if (e.name == "exp") { check_arity(e, 1); return unary([](cplx v) { return std::exp(v); }); }
            if (e.name == "sqrt") { check_arity(e, 1); return unary([](cplx v) { return std::sqrt(v); }); }
            if (e.name == "gauss_damped") {
                // expr · exp(−(q² + p²) / (2 w²))
                check_arity(e, 2);
                std::vector<cplx> a = eval_row(e.args[0], q, p, hbar);
                const std::vector<cplx> w = eval_row(e.args[1], q, p, hbar);
                for (std::size_t k = 0; k < n; ++k) a[k] *= std::exp(-(q * q + p[k] * p[k]) / (2.0 * w[k] * w[k]));
                return a;
            }
            if (e.name == "coswave") {
                // cos((p0 q − q0 p) / ħ)
                check_arity(e, 2);
                const std::vector<cplx> q0 = eval_row(e.args[0], q, p, hbar);
                const std::vector<cplx> p0 = eval_row(e.args[1], q, p, hbar);
                std::vector<cplx> out(n);
                for (std::size_t k = 0; k < n; ++k) out[k] = std::cos((p0[k] * q - q0[k] * p[k]) / hbar);
                return out;
            }
            throw ParseError("unknown function '" + e.name + "'", e.position);
        }
    }
    throw ParseError("unsupported expression", e.position);
}

inline void validate_numeric(const Expr& e) {
    if (e.kind == Expr::Kind::Call) {
        static const char* known[] = {"cos", "sin", "exp", "sqrt", "gauss_damped", "coswave"};
        bool ok = false;
        for (const char* k : known) ok = ok || e.name == k;
        if (!ok) throw ParseError("unknown function '" + e.name + "'", e.position);
        const std::size_t arity = (e.name == "gauss_damped" || e.name == "coswave") ? 2 : 1;
        check_arity(e, arity);
    }
    for (const auto& a : e.args) validate_numeric(a);
}

}  // namespace detail

}  // namespace bjq
