#include "test_support.hpp"

using namespace bjq;

namespace {

const NCPolynomial q = NCPolynomial::q();
const NCPolynomial p = NCPolynomial::p();
const HbarScalar minus_i_hbar = HbarScalar::hbar(1, -ComplexRational::i());

NCPolynomial w(std::initializer_list<Letter> letters) { return NCPolynomial(Word(letters)); }

// Closed form: p^a q^b = Σ_k (−iħ)^k k! C(a,k) C(b,k) q^{b−k} p^{a−k}
NCPolynomial power_product_oracle(int a, int b) {
    NCPolynomial out;
    for (int k = 0; k <= std::min(a, b); ++k) {
        const Rational c = factorial(k) * binomial(a, k) * binomial(b, k);
        const ComplexRational phase = k % 4 == 0 ? ComplexRational(1)
                                      : k % 4 == 1 ? -ComplexRational::i()
                                      : k % 4 == 2 ? ComplexRational(-1)
                                                   : ComplexRational::i();
        out.add_term(Word::canonical(b - k, a - k), HbarScalar::hbar(k, phase * ComplexRational(c)));
    }
    return out;
}

NCPolynomial random_polynomial(std::mt19937_64& rng, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> len(0, max_degree), terms(1, max_terms), num(-5, 5), den(1, 4), hp(0, 1);
    NCPolynomial out;
    const int t = terms(rng);
    for (int k = 0; k < t; ++k) {
        std::vector<Letter> letters(static_cast<std::size_t>(len(rng)));
        for (auto& l : letters) l = std::bernoulli_distribution(0.5)(rng) ? Letter::P : Letter::Q;
        const ComplexRational c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        out.add_term(Word(letters), HbarScalar::hbar(hp(rng), c));
    }
    return out;
}

}  // namespace

TEST(HbarScalar, ExactArithmetic) {
    const HbarScalar third(Rational(1, 3));
    EXPECT_EQ(third + third + third, HbarScalar(1));
    EXPECT_TRUE((third - third).is_zero());
    const HbarScalar x = HbarScalar(1) + HbarScalar::hbar(1, ComplexRational::i());  // 1 + iħ
    const HbarScalar y = HbarScalar(1) - HbarScalar::hbar(1, ComplexRational::i());  // 1 − iħ
    EXPECT_EQ(x * y, HbarScalar(1) + HbarScalar::hbar(2));
    EXPECT_EQ(x.conj(), y);
    EXPECT_EQ(x.degree(), 1);
    EXPECT_EQ(HbarScalar().degree(), -1);
    EXPECT_DOUBLE_EQ((x * y).evaluate(2.0).real(), 5.0);
}

TEST(Multiply, Examples) {
    EXPECT_EQ(multiply(NCPolynomial(1), p), p);
    const NCPolynomial pq = multiply(p, q);
    ASSERT_EQ(pq.term_count(), 1u);
    EXPECT_EQ(pq.coefficient(Word{Letter::P, Letter::Q}), HbarScalar(1));
    EXPECT_EQ(multiply(q + p, q), w({Letter::Q, Letter::Q}) + w({Letter::P, Letter::Q}));
    EXPECT_EQ(multiply(q + p, q).degree(), 2);
}

TEST(Multiply, IsBilinear) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        const auto a = random_polynomial(rng, 3, 3), b = random_polynomial(rng, 3, 3), c = random_polynomial(rng, 3, 3);
        EXPECT_EQ(multiply(a + b, c), multiply(a, c) + multiply(b, c));
        EXPECT_EQ(multiply(a, b + c), multiply(a, b) + multiply(a, c));
    }
}

TEST(NormalOrder, Examples) {
    EXPECT_EQ(normal_order(p * q), q * p + NCPolynomial(minus_i_hbar));
    EXPECT_EQ(normal_order(p * p * q), q * p * p + p * (minus_i_hbar * HbarScalar(2)));
    EXPECT_EQ(normal_order(q * p), q * p);
    EXPECT_EQ(to_string(normal_order(p * q)), "q p - i*h");
    EXPECT_EQ(to_string(normal_order(p * p * q)), "q p^2 - 2*i*h*p");
}

TEST(NormalOrder, MatchesClosedFormForPowerProducts) {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) {
            const NCPolynomial lhs(Word::power(Letter::P, a) * Word::power(Letter::Q, b));
            EXPECT_EQ(normal_order(lhs), power_product_oracle(a, b)) << "a=" << a << " b=" << b;
        }
}

TEST(NormalOrder, IsIdempotentAndCanonical) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 30; ++k) {
        const NCPolynomial a = random_polynomial(rng, 6, 4);
        const NCPolynomial n = normal_order(a);
        EXPECT_TRUE(n.is_normal_ordered());
        EXPECT_EQ(normal_order(n), n);
    }
}

TEST(NormalOrder, ConfluentUnderRandomRewriteOrders) {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 60; ++k) {
        NCPolynomial prod(1);
        const int factors = std::uniform_int_distribution<int>(1, 8)(rng);
        for (int f = 0; f < factors; ++f) prod = prod * (std::bernoulli_distribution(0.5)(rng) ? p : q);
        const NCPolynomial left = normal_order(prod, leftmost_rewrite());
        EXPECT_EQ(normal_order(prod, rightmost_rewrite()), left);
        EXPECT_EQ(normal_order(prod, random_rewrite(rng())), left);
        EXPECT_EQ(normal_order(prod, random_rewrite(rng())), left);
    }
}

TEST(NormalOrder, IsAHomomorphism) {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 25; ++k) {
        const NCPolynomial a = random_polynomial(rng, 6, 3);
        const NCPolynomial b = random_polynomial(rng, 6, 3);
        EXPECT_EQ(normal_order(a * b), normal_order(normal_order(a) * normal_order(b)));
    }
}

TEST(NormalOrder, DegreeFiltration) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 40; ++k) {
        std::vector<Letter> letters(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 8)(rng)));
        for (auto& l : letters) l = std::bernoulli_distribution(0.5)(rng) ? Letter::P : Letter::Q;
        const Word word(letters);
        const NCPolynomial n = normal_order(NCPolynomial(word));
        EXPECT_LE(n.degree(), static_cast<int>(word.size()));
        for (const auto& [out, c] : n.terms()) {
            const auto& coeffs = c.coefficients();
            for (std::size_t hp = 0; hp < coeffs.size(); ++hp) {
                if (coeffs[hp].is_zero()) continue;
                EXPECT_EQ(out.count(Letter::Q), word.count(Letter::Q) - static_cast<int>(hp));
                EXPECT_EQ(out.count(Letter::P), word.count(Letter::P) - static_cast<int>(hp));
            }
        }
    }
}

TEST(Commutator, Examples) {
    EXPECT_EQ(commutator(p, q), NCPolynomial(minus_i_hbar));
    EXPECT_TRUE(commutator(p, p).is_zero());
    EXPECT_EQ(commutator(p * p, q), p * (minus_i_hbar * HbarScalar(2)));
    EXPECT_EQ(commutator(q, p), NCPolynomial(HbarScalar::hbar(1, ComplexRational::i())));
}

TEST(PowerIdentity, Examples) {
    EXPECT_TRUE(check_power_identity(1, 1));
    EXPECT_TRUE(check_power_identity(2, 1));
    EXPECT_TRUE(check_power_identity(3, 3));
    EXPECT_THROW(check_power_identity(0, 1), std::invalid_argument);
}

TEST(PowerIdentity, HoldsForAllSmallPowers) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) EXPECT_TRUE(check_power_identity(m, n)) << m << "," << n;
}

TEST(Adjoint, ReversesAndConjugates) {
    const NCPolynomial a = p * q * HbarScalar(ComplexRational(1, 2));
    EXPECT_EQ(adjoint(a), q * p * HbarScalar(ComplexRational(1, -2)));
    EXPECT_EQ(adjoint(adjoint(a)), a);
    // (pq)† = qp, so normal_order(pq) is not self-adjoint
    EXPECT_FALSE(normal_order(adjoint(normal_order(p * q))) == normal_order(p * q));
}

TEST(TextFormat, PrintsCanonicalForms) {
    EXPECT_EQ(to_string(NCPolynomial()), "0");
    EXPECT_EQ(to_string(NCPolynomial(1)), "1");
    EXPECT_EQ(to_string(normal_order(parse_ncpolynomial("p^2 q^2"))), "q^2 p^2 - 4*i*h*q p - 2*h^2");
    EXPECT_EQ(to_string(parse_ncpolynomial("-1/6*h^2")), "-1/6*h^2");
    EXPECT_EQ(to_string(parse_ncpolynomial("(1/2 - 3/4*i) p q")), "(1/2-3/4*i)*p q");
}

TEST(TextFormat, RoundTripsExactly) {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 50; ++k) {
        const NCPolynomial a = random_polynomial(rng, 6, 5);
        EXPECT_EQ(parse_ncpolynomial(to_string(a)), a) << to_string(a);
        const NCPolynomial n = normal_order(a);
        EXPECT_EQ(parse_ncpolynomial(to_string(n)), n) << to_string(n);
    }
}

TEST(TextFormat, ParsesDecimalsExactly) {
    EXPECT_EQ(parse_ncpolynomial("0.125*q"), q * HbarScalar(Rational(1, 8)));
    EXPECT_EQ(parse_ncpolynomial("2.5e-1"), NCPolynomial(HbarScalar(Rational(1, 4))));
    EXPECT_EQ(parse_ncpolynomial("q/4"), q * HbarScalar(Rational(1, 4)));
}

TEST(TextFormat, ReportsErrorPosition) {
    try {
        parse_ncpolynomial("q + * p");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_ncpolynomial("q / p"), ParseError);
    EXPECT_THROW(parse_ncpolynomial("cos(q)"), ParseError);
    EXPECT_THROW(parse_ncpolynomial("x"), ParseError);
    EXPECT_THROW(parse_ncpolynomial("q^(1/2)"), ParseError);
    EXPECT_THROW(parse_ncpolynomial(""), ParseError);
}
