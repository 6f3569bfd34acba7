#include "test_support.hpp"

#include <numbers>

using namespace bjq;

namespace {

const GridSpec desk = GridSpec::desk();

const OperatorMatrix& harmonic() {
    static const OperatorMatrix h = weyl_kernel_quantize(SampledSymbol::from_expression("p^2/2 + q^2/2"), desk);
    return h;
}

const Propagator& harmonic_propagator() {
    static const Propagator u(harmonic());
    return u;
}

// log2 of successive residual ratios for δ, δ/2, δ/4.
std::vector<double> orders(const std::function<double(double)>& residual, double delta) {
    const double r0 = residual(delta), r1 = residual(delta / 2), r2 = residual(delta / 4);
    return {std::log2(r0 / r1), std::log2(r1 / r2)};
}

}  // namespace

TEST(Propagator, RejectsNonHermitian) {
    OperatorMatrix m = build_position(desk);
    Eigen::MatrixXcd e = m.entries();
    e(0, 1) = 1.0;
    EXPECT_THROW(Propagator(OperatorMatrix(desk, e)), ValidationError);
    EXPECT_THROW(heisenberg_observable(harmonic_propagator(), build_position(GridSpec(64, 8.0, 1.0)), 1.0), GridMismatchError);
}

TEST(Propagator, IdentityAtZeroAndUnitary) {
    const Propagator& u = harmonic_propagator();
    EXPECT_TRUE(u.unitary(0.0).entries() == OperatorMatrix::identity(desk).entries());
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> time(0.0, 10.0);
    const StateVector psi = StateVector::gaussian(desk, 0.5, -0.3, 0.6);
    for (int k = 0; k < 10; ++k) {
        const double t = time(rng);
        EXPECT_LE(u.unitarity_residual(t), 1e-10) << t;
        EXPECT_NEAR(evolve_state(u, psi, t).norm(), psi.norm(), 1e-10);
    }
    EXPECT_TRUE(evolve_state(u, psi, 0.0).amplitudes() == psi.amplitudes());
}

TEST(EvolveState, CoherentStateFollowsClassicalCircle) {
    const Propagator& u = harmonic_propagator();
    const StateVector psi = StateVector::gaussian(desk, 1.5, 0.5, std::sqrt(0.5));
    const OperatorMatrix q = build_position(desk), p = build_momentum(desk);
    for (double t : {0.5, 1.0, 2.0, std::numbers::pi, 2 * std::numbers::pi}) {
        const StateVector s = evolve_state(u, psi, t);
        EXPECT_NEAR(expectation(q, s).real(), 1.5 * std::cos(t) + 0.5 * std::sin(t), 1e-6) << t;
        EXPECT_NEAR(expectation(p, s).real(), 0.5 * std::cos(t) - 1.5 * std::sin(t), 1e-6) << t;
    }
    EXPECT_GT(std::abs(inner(evolve_state(u, psi, 2 * std::numbers::pi), psi)), 1.0 - 1e-6);
}

TEST(EvolveState, SchrodingerResidualIsSecondOrder) {
    const Propagator& u = harmonic_propagator();
    const StateVector psi = StateVector::gaussian(desk, 1.0, 0.0, 0.6);
    for (double o : orders([&](double d) { return schrodinger_residual(u, psi, 0.7, d); }, 1e-2)) EXPECT_NEAR(o, 2.0, 0.1);
}

TEST(Heisenberg, Examples) {
    const Propagator& u = harmonic_propagator();
    const OperatorMatrix q = build_position(desk);
    EXPECT_TRUE(heisenberg_observable(u, q, 0.0).entries() == q.entries());
    for (double t : {0.3, 4.0}) {
        const OperatorMatrix h = heisenberg_observable(u, harmonic(), t);
        EXPECT_LE(test::max_abs_diff(h, harmonic()), 1e-9);
        EXPECT_LE(check_heisenberg_equation(u, harmonic(), t, 1e-3), 1e-8);
    }
}

TEST(Heisenberg, ResidualIsSecondOrder) {
    const Propagator& u = harmonic_propagator();
    const OperatorMatrix q = build_position(desk);
    const OperatorMatrix bj = realize(bj_quantize({2, 1}), desk);
    for (const OperatorMatrix* a : {&q, &bj})
        for (double o : orders([&](double d) { return check_heisenberg_equation(u, *a, 0.4, d); }, 1e-3)) EXPECT_NEAR(o, 2.0, 0.1);
}

TEST(Pictures, ExpectationValuesAgree) {
    const OperatorMatrix h = weyl_kernel_quantize(SampledSymbol::from_expression("p^2/2 + q^4/4 - q^2"), desk);
    const Propagator u(h);
    const OperatorMatrix p = build_momentum(desk);
    const OperatorMatrix obs = realize(bj_quantize({1, 2}), desk);
    std::mt19937_64 rng(12);
    const StateVector psi = test::random_gaussian(desk, rng);
    const double e0 = expectation(h, psi).real();
    for (double t : {0.0, 0.5, 1.5, 3.0}) {
        const PictureState ps = picture_state(u, psi, t);
        EXPECT_NEAR(ps.schrodinger.norm(), ps.heisenberg.norm(), 1e-10);
        for (const OperatorMatrix* a : {&p, &obs}) {
            const std::complex<double> s = expectation(*a, ps.schrodinger);
            const std::complex<double> hp = expectation(heisenberg_observable(u, *a, t), ps.heisenberg);
            EXPECT_LE(std::abs(s - hp), 1e-8 * std::max(1.0, std::abs(s)));
        }
        EXPECT_NEAR(expectation(h, ps.schrodinger).real(), e0, 1e-8);
    }
}

TEST(Divergence, CentralGapIsAGlobalPhase) {
    const StateVector psi = StateVector::gaussian(desk, 0.0, 0.0, 0.5);
    const DivergenceReport r = divergence_experiment(parse_classical("p^2*q^2"), psi, 0.1, 5);
    ASSERT_TRUE(r.gap.central);
    EXPECT_NEAR(r.gap.central_value.real(), -1.0 / 6.0, 1e-15);
    EXPECT_TRUE(r.warnings.empty());
    ASSERT_EQ(r.samples.size(), 5u);
    for (const DivergenceSample& s : r.samples) {
        EXPECT_LE(s.abs_gap, 1e-6);
        EXPECT_NEAR(s.fidelity, 1.0, 1e-6);
        EXPECT_NEAR(s.phase, s.t / 6.0, 1e-6) << s.t;
    }
}

TEST(Divergence, ConfinedCentralGap) {
    const StateVector psi = StateVector::gaussian(desk, 0.5, 0.0, 0.6);
    const DivergenceReport r = divergence_experiment(parse_classical("p^2/2 + q^2/2 + p^2*q^2/10"), psi, 3.0, 7);
    ASSERT_TRUE(r.gap.central);
    for (const DivergenceSample& s : r.samples) {
        EXPECT_LE(s.abs_gap, 1e-6);
        EXPECT_NEAR(s.phase, s.t / 60.0, 1e-6) << s.t;
    }
}

TEST(Divergence, NonCentralGapGrowsFromZero) {
    EXPECT_EQ(to_string(find_noncentral_monomial(4).value()), "p^2*q^3");
    const StateVector psi = StateVector::gaussian(desk, 0.0, 0.0, 0.5);
    const DivergenceReport r = divergence_experiment(parse_classical("p^2*q^2 + p^2*q^3"), psi, 0.3, 7);
    EXPECT_FALSE(r.gap.central);
    EXPECT_EQ(r.samples.front().abs_gap, 0.0);
    for (std::size_t k = 1; k < r.samples.size(); ++k) EXPECT_GT(r.samples[k].abs_gap, r.samples[k - 1].abs_gap);
    EXPECT_GT(r.samples.back().abs_gap, 1e-3);
}

TEST(Divergence, HarmonicHasNoDivergence) {
    const StateVector psi = StateVector::gaussian(desk, 1.0, 0.5, 0.6);
    const DivergenceReport r = divergence_experiment(parse_classical("p^2/2 + q^2/2"), psi, 2.0, 5);
    EXPECT_TRUE(r.gap.central);
    EXPECT_EQ(r.gap.central_value, std::complex<double>());
    EXPECT_LE(r.max_abs_gap(), 1e-10);
    EXPECT_EQ(r.warnings.size(), 1u);
    EXPECT_THROW(divergence_experiment(parse_classical("p^2"), psi, 1.0, 1), ValidationError);
}

TEST(Divergence, ReportSerialization) {
    const StateVector psi = StateVector::gaussian(GridSpec(32, 4.0, 1.0), 0.0, 0.0, 0.5);
    const DivergenceReport r = divergence_experiment(parse_classical("p^2*q^2"), psi, 0.1, 3);
    std::ostringstream os;
    write_csv(os, r);
    EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "t,exp_q_bj,exp_q_weyl,abs_gap,fidelity,phase");
    const json j = to_json(r);
    EXPECT_EQ(j["gap"]["classification"], "central");
    EXPECT_EQ(j["samples"].size(), 3u);
}
