#pragma once

#include "bjq/hbar_scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bjq {

enum class Letter : unsigned char { Q = 0, P = 1 };

// Finite sequence of Q/P letters; the empty word is the identity.
// Ordered by length (longest first), then lexicographically with Q < P.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // q^a p^b
    static Word canonical(int a, int b) {
        Word w;
        w.letters_.insert(w.letters_.end(), static_cast<std::size_t>(a), Letter::Q);
        w.letters_.insert(w.letters_.end(), static_cast<std::size_t>(b), Letter::P);
        return w;
    }
    static Word power(Letter l, int n) { return Word(std::vector<Letter>(static_cast<std::size_t>(n), l)); }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    Letter operator[](std::size_t k) const { return letters_[k]; }

    int count(Letter l) const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), l)); }

    bool is_normal_ordered() const { return pq_positions().empty(); }

    // Positions k with letters (k, k+1) = (P, Q).
    std::vector<std::size_t> pq_positions() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k + 1 < letters_.size(); ++k)
            if (letters_[k] == Letter::P && letters_[k + 1] == Letter::Q) out.push_back(k);
        return out;
    }

    Word reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

    friend Word operator*(const Word& a, const Word& b) {
        std::vector<Letter> out = a.letters_;
        out.insert(out.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(out));
    }
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.letters_ < b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

// Finite linear combination of words with HbarScalar coefficients. Zero terms are never stored.
class NCPolynomial {
public:
    using TermMap = std::map<Word, HbarScalar>;

    NCPolynomial() = default;
    NCPolynomial(HbarScalar c) { add_term(Word(), std::move(c)); }
    NCPolynomial(int c) : NCPolynomial(HbarScalar(c)) {}
    NCPolynomial(const Word& w, HbarScalar c = 1) { add_term(w, std::move(c)); }

    static NCPolynomial q() { return NCPolynomial(Word{Letter::Q}); }
    static NCPolynomial p() { return NCPolynomial(Word{Letter::P}); }
    static NCPolynomial hbar() { return NCPolynomial(HbarScalar::hbar()); }
    static NCPolynomial i() { return NCPolynomial(HbarScalar(ComplexRational::i())); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    HbarScalar coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? HbarScalar() : it->second;
    }

    void add_term(const Word& w, const HbarScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_normal_ordered() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_normal_ordered(); });
    }

    // Longest word length; −1 for zero.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }

    // True iff the only word present is the empty word (or the polynomial is zero).
    bool is_central() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    bool has_real_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
    }

    NCPolynomial& operator+=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPolynomial& operator-=(const NCPolynomial& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NCPolynomial& operator*=(const HbarScalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator-(NCPolynomial a) { return a *= HbarScalar(-1); }
    friend NCPolynomial operator*(NCPolynomial a, const HbarScalar& s) { return a *= s; }
    friend NCPolynomial operator*(const HbarScalar& s, NCPolynomial a) { return a *= s; }
    // Formal (free-algebra) product; not normal-ordered.
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
        NCPolynomial out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
        return out;
    }
    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

inline NCPolynomial multiply(const NCPolynomial& a, const NCPolynomial& b) { return a * b; }

inline NCPolynomial power(const NCPolynomial& a, int n) {
    if (n < 0) throw std::invalid_argument("negative power of a noncommutative polynomial");
    NCPolynomial out(1);
    for (int k = 0; k < n; ++k) out = out * a;
    return out;
}

// Chooses which PQ occurrence to rewrite; returns an index into `positions` (never empty).
using RewriteStrategy = std::function<std::size_t(const Word&, const std::vector<std::size_t>& positions)>;

inline RewriteStrategy leftmost_rewrite() {
    return [](const Word&, const std::vector<std::size_t>&) -> std::size_t { return 0; };
}

inline RewriteStrategy rightmost_rewrite() {
    return [](const Word&, const std::vector<std::size_t>& pos) -> std::size_t { return pos.size() - 1; };
}

inline RewriteStrategy random_rewrite(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const Word&, const std::vector<std::size_t>& pos) -> std::size_t {
        return std::uniform_int_distribution<std::size_t>(0, pos.size() - 1)(*rng);
    };
}

// Rewrites PQ → QP − iħ·(pair deleted) until every word has all Q before all P.
inline NCPolynomial normal_order(const NCPolynomial& a, const RewriteStrategy& strategy) {
    const HbarScalar minus_i_hbar = HbarScalar::hbar(1, -ComplexRational::i());
    NCPolynomial::TermMap pending = a.terms();
    NCPolynomial out;
    auto accumulate = [&pending](Word w, const HbarScalar& c) {
        auto [it, inserted] = pending.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) pending.erase(it);
        }
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const HbarScalar& c = node.mapped();
        const auto positions = w.pq_positions();
        if (positions.empty()) {
            out.add_term(w, c);
            continue;
        }
        const std::size_t k = positions.at(strategy(w, positions));
        std::vector<Letter> swapped = w.letters();
        std::swap(swapped[k], swapped[k + 1]);
        std::vector<Letter> deleted = w.letters();
        deleted.erase(deleted.begin() + static_cast<std::ptrdiff_t>(k), deleted.begin() + static_cast<std::ptrdiff_t>(k) + 2);
        accumulate(Word(std::move(swapped)), c);
        accumulate(Word(std::move(deleted)), c * minus_i_hbar);
    }
    return out;
}

inline NCPolynomial normal_order(const NCPolynomial& a) { return normal_order(a, leftmost_rewrite()); }

inline NCPolynomial commutator(const NCPolynomial& a, const NCPolynomial& b) { return normal_order(a * b - b * a); }

// Formal adjoint: reverse every word, conjugate every coefficient.
inline NCPolynomial adjoint(const NCPolynomial& a) {
    NCPolynomial out;
    for (const auto& [w, c] : a.terms()) out.add_term(w.reversed(), c.conj());
    return out;
}

// p^m q^n − q^n p^m  ==  −iħ m Σ_{ℓ<n} q^{n−1−ℓ} p^{m−1} q^ℓ, compared after normal ordering.
inline bool check_power_identity(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("check_power_identity requires m >= 1 and n >= 1");
    const NCPolynomial pm(Word::power(Letter::P, m));
    const NCPolynomial qn(Word::power(Letter::Q, n));
    const NCPolynomial lhs = normal_order(pm * qn - qn * pm);
    NCPolynomial sum;
    for (int l = 0; l < n; ++l)
        sum += NCPolynomial(Word::power(Letter::Q, n - 1 - l) * Word::power(Letter::P, m - 1) * Word::power(Letter::Q, l));
    const NCPolynomial rhs = normal_order(sum * HbarScalar::hbar(1, ComplexRational(0, Rational(-m))));
    return lhs == rhs;
}

}  // namespace bjq
