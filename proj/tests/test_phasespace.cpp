#include "test_support.hpp"

#include <numbers>

using namespace bjq;

namespace {

const GridSpec desk = GridSpec::desk();

bool interior(int i, int n) { return std::min(i, n - 1 - i) >= n / 4 + 1; }

double gaussian_wigner(double q, double p, double q0, double p0, double s, double hbar) {
    return std::exp(-(q - q0) * (q - q0) / (2 * s * s) - 2 * s * s * (p - p0) * (p - p0) / (hbar * hbar)) /
           (std::numbers::pi * hbar);
}

}  // namespace

TEST(CrossWigner, GaussianClosedForm) {
    for (auto [q0, p0, s] : {std::tuple{0.0, 0.0, 0.5}, std::tuple{0.7, -0.4, 0.6}}) {
        const StateVector psi = StateVector::gaussian(desk, q0, p0, s);
        const PhaseSpaceFunction w = cross_wigner(psi, psi);
        EXPECT_NEAR(w.integral().real(), 1.0, 1e-8);
        EXPECT_LE(w.max_imag(), 1e-12);
        double err = 0.0;
        for (int i = 0; i < desk.size(); ++i)
            for (int j = 0; j < desk.size(); ++j)
                err = std::max(err, std::abs(w(i, j) - gaussian_wigner(desk.q(i), desk.p_sorted(j), q0, p0, s, 1.0)));
        EXPECT_LE(err, 1e-10);
    }
}

TEST(CrossWigner, OrthogonalPairIntegratesToZero) {
    const StateVector even = StateVector::gaussian(desk, 0.0, 0.0, 0.5);
    Eigen::VectorXcd odd = even.amplitudes();
    for (int i = 0; i < desk.size(); ++i) odd[i] *= desk.q(i);
    const StateVector o = StateVector(desk, odd).normalized();
    ASSERT_LE(std::abs(inner(even, o)), 1e-14);
    EXPECT_LE(std::abs(cross_wigner(even, o).integral()), 1e-8);
}

TEST(CrossWigner, DiagonalIsRealAndPairsWithMatrixElements) {
    std::mt19937_64 rng(4);
    const PhaseSpaceFunction a = SampledSymbol::from_expression("gauss_damped(p*q^2 + p^3, 2)").tabulate(desk);
    const OperatorMatrix m = weyl_kernel_quantize(SampledSymbol::from_table(a), desk);
    for (int k = 0; k < 3; ++k) {
        const StateVector f = test::random_gaussian(desk, rng), g = test::random_gaussian(desk, rng);
        EXPECT_LE(cross_wigner(f, f).max_imag(), 1e-12);
        EXPECT_LE(std::abs(pairing(a, cross_wigner(f, g)) - matrix_element(g, m, f)), 1e-9);
        EXPECT_THROW(cross_wigner(f, StateVector::gaussian(GridSpec(64, 8.0, 1.0), 0, 0, 1)), GridMismatchError);
    }
}

TEST(WeylSymbolOf, PositionAndMomentum) {
    const int n = desk.size();
    const PhaseSpaceFunction bq = weyl_symbol_of(build_position(desk));
    const PhaseSpaceFunction bp = weyl_symbol_of(build_momentum(desk));
    double eq = 0.0, ep = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            eq = std::max(eq, std::abs(bq(i, j) - desk.q(i)));
            if (interior(i, n)) ep = std::max(ep, std::abs(bp(i, j) - desk.p_sorted(j)));
        }
    EXPECT_LE(eq, 1e-10);
    EXPECT_LE(ep, 1e-8);
}

TEST(WeylSymbolOf, RoundTrip) {
    for (const char* s : {"gauss_damped(p^2*q^2, 1)", "gauss_damped(p^3 - q*p, 1)"}) {
        const OperatorMatrix m = weyl_kernel_quantize(SampledSymbol::from_expression(s), desk);
        const OperatorMatrix back = weyl_kernel_quantize(SampledSymbol::from_table(weyl_symbol_of(m)), desk);
        EXPECT_LE(relative_frobenius(back, m), 1e-8) << s;
    }
}

TEST(WeylSymbolOf, BornJordanP2Q2ShiftsByCentralTerm) {
    // Pointwise on the damped symbol, and as a Wigner average for the undamped one.
    const SampledSymbol damped = SampledSymbol::from_expression("gauss_damped(p^2*q^2, 1)");
    const PhaseSpaceFunction bw = weyl_symbol_of(weyl_kernel_quantize(damped, desk));
    const PhaseSpaceFunction bb = weyl_symbol_of(bj_kernel_quantize(damped, desk));
    const PhaseSpaceFunction predicted = apply_fafb(damped.tabulate(desk));
    double err = 0.0;
    for (int i = 0; i < desk.size(); ++i)
        if (interior(i, desk.size()))
            for (int j = 0; j < desk.size(); ++j) err = std::max(err, std::abs(bb(i, j) - bw(i, j) - (predicted(i, j) - damped.tabulate(desk)(i, j))));
    EXPECT_LE(err, 1e-4);

    const OperatorMatrix bj = bj_kernel_quantize(SampledSymbol::from_expression("p^2*q^2"), desk);
    const PhaseSpaceFunction b = weyl_symbol_of(bj);
    const PhaseSpaceFunction a = SampledSymbol::from_expression("p^2*q^2").tabulate(desk);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 3; ++k) {
        const StateVector psi = test::random_gaussian(desk, rng);
        const PhaseSpaceFunction w = cross_wigner(psi, psi);
        EXPECT_NEAR((pairing(b, w) - pairing(a, w)).real(), -1.0 / 6.0, 1e-6);
    }
}

TEST(ThetaMultiplier, BoundsAndZeroSet) {
    const ThetaMultiplier theta(desk);
    const int n = desk.size();
    int zeros = 0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const long t = static_cast<long>(desk.fft_mode(k)) * desk.fft_mode(l);
            EXPECT_LE(std::abs(theta(k, l)), 1.0);
            if (t == 0) EXPECT_EQ(theta(k, l), 1.0);
            if (t != 0 && t % n == 0) {
                EXPECT_EQ(theta(k, l), 0.0);
                EXPECT_NEAR(theta.zeta(k) * theta.eta(l) / (2 * std::numbers::pi * desk.hbar()), static_cast<double>(t / n), 1e-12);
                ++zeros;
            } else {
                EXPECT_NE(theta(k, l), 0.0);
            }
        }
    EXPECT_GT(zeros, 0);
    EXPECT_NEAR(ThetaMultiplier::sinc_ratio(64, 128), 2.0 / std::numbers::pi, 1e-15);
    EXPECT_NEAR(ThetaMultiplier::sinc_ratio(-192, 128), -2.0 / (3.0 * std::numbers::pi), 1e-15);
}

TEST(ApplyFafb, LinearSymbolUnchanged) {
    const PhaseSpaceFunction a = PhaseSpaceFunction::sample(desk, [](double q, double) { return q; });
    const PhaseSpaceFunction b = apply_fafb(a);
    EXPECT_LE((b.values() - a.values()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ApplyFafb, ZeroSetCosineIsAnnihilated) {
    const DequantizationWitness w = dequantization_witness(desk);
    const PhaseSpaceFunction a = w.symbol.tabulate(desk);
    EXPECT_LE(apply_fafb(a).values().cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(a.values().cwiseAbs().maxCoeff(), 1.0, 1e-12);
}

TEST(ApplyFafb, MatchesKernelPathOnReliableSupport) {
    const SampledSymbol a = SampledSymbol::from_expression("gauss_damped(p^2*q^2, 1)");
    const PhaseSpaceFunction table = a.tabulate(desk);
    const Eigen::MatrixXcd fa = fft2(table.values());
    const Eigen::MatrixXcd fb_kernel = fft2(weyl_symbol_of(bj_kernel_quantize(a, desk)).values());
    const Eigen::MatrixXcd fb_fafb = fft2(apply_fafb(table).values());
    const double peak = fa.cwiseAbs().maxCoeff();
    double worst = 0.0;
    int support = 0;
    for (int k = 0; k < desk.size(); ++k)
        for (int l = 0; l < desk.size(); ++l)
            if (std::abs(fa(k, l)) > 1e-6 * peak) {
                ++support;
                worst = std::max(worst, std::abs(fb_kernel(k, l) - fb_fafb(k, l)));
            }
    EXPECT_GT(support, 100);
    EXPECT_LE(worst / peak, 1e-4);
}

TEST(DequantizationWitness, ZeroSetAndHalfway) {
    const DequantizationWitness zero = dequantization_witness(desk);
    EXPECT_NEAR(zero.q0 * zero.p0, 2 * std::numbers::pi * desk.hbar(), 1e-12);
    EXPECT_EQ(zero.theta, 0.0);
    EXPECT_LT(zero.ratio, 1e-6);
    EXPECT_GT(zero.norm_weyl, 0.1);
    EXPECT_LT(zero.norm_weyl, 100.0);

    const DequantizationWitness half = dequantization_witness(desk, 0.5);
    EXPECT_NEAR(half.q0 * half.p0, std::numbers::pi * desk.hbar(), 1e-12);
    EXPECT_NEAR(half.ratio, 2.0 / std::numbers::pi, 1e-3);

    EXPECT_THROW(dequantization_witness(GridSpec(16, 1.0, 1.0)), NumericalError);
    EXPECT_THROW(dequantization_witness(desk, 0.0), ValidationError);
}

TEST(DequantizationWitness, ZeroSymbol) {
    const SampledSymbol zero = SampledSymbol::from_function([](double, double) { return std::complex<double>(); });
    EXPECT_EQ(bj_weyl_norm_ratio(zero, desk), 0.0);
}

TEST(WeakValue, Examples) {
    const StateVector g = StateVector::gaussian(desk, 0.0, 0.0, 0.5);
    const StateVector h = StateVector::gaussian(desk, 0.3, 0.2, 0.6);
    EXPECT_LE(std::abs(weak_value(OperatorMatrix::identity(desk), h, g) - 1.0), 1e-12);
    const OperatorMatrix q2 = realize(parse_ncpolynomial("q^2"), desk);
    EXPECT_LE(std::abs(weak_value(q2, g, g) - 0.25), 1e-8);

    const SampledSymbol a = SampledSymbol::from_expression("p^2*q^2");
    const OperatorMatrix bj = bj_kernel_quantize(a, desk), w = weyl_kernel_quantize(a, desk);
    std::mt19937_64 rng(7);
    for (int k = 0; k < 3; ++k) {
        const StateVector phi = test::random_gaussian(desk, rng), psi = test::random_gaussian(desk, rng);
        EXPECT_LE(std::abs(weak_value(bj, phi, psi) - weak_value(w, phi, psi) + 1.0 / 6.0), 1e-6);
    }
}

TEST(WeakValue, NearOrthogonalPairThrows) {
    const StateVector left = StateVector::gaussian(desk, -6.0, 0.0, 0.2);
    const StateVector right = StateVector::gaussian(desk, 6.0, 0.0, 0.2);
    EXPECT_THROW(weak_value(OperatorMatrix::identity(desk), left, right), NumericalError);
    const PhaseSpaceFunction one = PhaseSpaceFunction::sample(desk, [](double, double) { return 1.0; });
    EXPECT_THROW(weak_value_phase_space(one, left, right, KernelRule::Weyl), NumericalError);
}

TEST(WeakValuePhaseSpace, Examples) {
    const StateVector g = StateVector::gaussian(desk, 0.8, 0.0, 0.5);
    const PhaseSpaceFunction q = PhaseSpaceFunction::sample(desk, [](double x, double) { return x; });
    const PhaseSpaceFunction one = PhaseSpaceFunction::sample(desk, [](double, double) { return 1.0; });
    const StateVector h = StateVector::gaussian(desk, 0.3, 0.2, 0.6);
    for (KernelRule rule : {KernelRule::Weyl, KernelRule::BornJordan}) {
        EXPECT_LE(std::abs(weak_value_phase_space(q, g, g, rule) - 0.8), 1e-8);
        EXPECT_LE(std::abs(weak_value_phase_space(one, h, g, rule) - 1.0), 1e-8);
    }
    const PhaseSpaceFunction a = SampledSymbol::from_expression("p^2*q^2").tabulate(desk);
    EXPECT_LE(std::abs(weak_value_phase_space(a, h, g, KernelRule::Weyl) -
                       weak_value_phase_space(a, h, g, KernelRule::BornJordan) - 1.0 / 6.0),
              1e-6);
}

TEST(WeakValuePhaseSpace, AgreesWithOperatorPipeline) {
    const SampledSymbol a = SampledSymbol::from_expression("gauss_damped(p^2*q^2 + p*q^3, 2)");
    const PhaseSpaceFunction table = a.tabulate(desk);
    const OperatorMatrix w = kernel_quantize(a, desk, KernelRule::Weyl);
    const OperatorMatrix bj = kernel_quantize(a, desk, KernelRule::BornJordan);
    std::mt19937_64 rng(10);
    for (int k = 0; k < 10; ++k) {
        const StateVector phi = test::random_gaussian(desk, rng), psi = test::random_gaussian(desk, rng);
        EXPECT_LE(std::abs(weak_value_phase_space(table, phi, psi, KernelRule::Weyl) - weak_value(w, phi, psi)), 1e-6);
        EXPECT_LE(std::abs(weak_value_phase_space(table, phi, psi, KernelRule::BornJordan) - weak_value(bj, phi, psi)), 1e-6);
    }
}

TEST(PhaseSpaceIo, JsonAndCsv) {
    const GridSpec g(16, 2.0, 0.5);
    const PhaseSpaceFunction w = cross_wigner(StateVector::gaussian(g, 0.1, 0.2, 0.4), StateVector::gaussian(g, 0, 0, 0.5));
    const PhaseSpaceFunction back = phase_space_from_json(parse_json_text(to_json(w).dump()));
    EXPECT_TRUE(back.values() == w.values());
    std::ostringstream os;
    write_csv(os, w);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    EXPECT_EQ(header.rfind("p\\q,", 0), 0u);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), 16);
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    EXPECT_EQ(rows, 16);
}
