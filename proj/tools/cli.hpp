#pragma once

#include "bjq/bjq.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace bjq::cli {

enum ExitCode : int { Ok = 0, IdentityFailure = 1, ValidationFailure = 2, NumericalFailure = 3, IoFailure = 4 };

struct GaussianSpec {
    double q0 = 0.0;
    double p0 = 0.0;
    double sigma = 0.5;
};

// Everything a run depends on; a run is reproducible from this alone.
struct RunConfig {
    int n = 128;
    double l = 8.0;
    double hbar = 1.0;
    std::string rule = "bj";
    std::string symbol;
    GaussianSpec pre{0.0, 0.0, 0.5};
    GaussianSpec post{0.2, 0.1, 0.6};
    bool has_post = false;
    std::string format = "text";
    std::string out;
    int quadrature_order = 16;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double horizon = 1.0;
    int samples = 11;
    double multiple = 1.0;
    int random_pairs = 0;
    bool with_diff = false;

    GridSpec grid() const { return {n, l, hbar}; }
};

inline json gaussian_to_json(const GaussianSpec& g) { return {{"q0", g.q0}, {"p0", g.p0}, {"sigma", g.sigma}}; }

inline json to_json(const RunConfig& c) {
    return {{"grid", {{"N", c.n}, {"L", c.l}, {"hbar", c.hbar}}},
            {"rule", c.rule},
            {"symbol", c.symbol},
            {"pre", gaussian_to_json(c.pre)},
            {"post", gaussian_to_json(c.post)},
            {"quadrature_order", c.quadrature_order},
            {"seed", c.seed},
            {"horizon", c.horizon},
            {"samples", c.samples},
            {"multiple", c.multiple},
            {"random_pairs", c.random_pairs}};
}

inline GaussianSpec parse_gaussian(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError("state must be 'q0,p0,sigma', got '" + text + "'");
        }
    }
    if (v.size() != 3) throw ValidationError("state must be 'q0,p0,sigma', got '" + text + "'");
    return {v[0], v[1], v[2]};
}

inline GaussianSpec gaussian_from_json(const json& j, GaussianSpec base) {
    if (j.contains("q0")) base.q0 = j.at("q0").get<double>();
    if (j.contains("p0")) base.p0 = j.at("p0").get<double>();
    if (j.contains("sigma")) base.sigma = j.at("sigma").get<double>();
    return base;
}

inline void apply_config_json(RunConfig& c, const json& j) {
    try {
        if (!j.is_object()) throw ValidationError("config must be a JSON object");
        if (j.contains("grid")) {
            const json& g = j.at("grid");
            if (g.contains("N")) c.n = g.at("N").get<int>();
            if (g.contains("L")) c.l = g.at("L").get<double>();
            if (g.contains("hbar")) c.hbar = g.at("hbar").get<double>();
        }
        if (j.contains("rule")) c.rule = j.at("rule").get<std::string>();
        if (j.contains("symbol")) c.symbol = j.at("symbol").get<std::string>();
        if (j.contains("pre")) c.pre = gaussian_from_json(j.at("pre"), c.pre);
        if (j.contains("post")) {
            c.post = gaussian_from_json(j.at("post"), c.post);
            c.has_post = true;
        }
        if (j.contains("format")) c.format = j.at("format").get<std::string>();
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("quadrature_order")) c.quadrature_order = j.at("quadrature_order").get<int>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
        if (j.contains("horizon")) c.horizon = j.at("horizon").get<double>();
        if (j.contains("samples")) c.samples = j.at("samples").get<int>();
        if (j.contains("multiple")) c.multiple = j.at("multiple").get<double>();
        if (j.contains("random_pairs")) c.random_pairs = j.at("random_pairs").get<int>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("invalid config: ") + e.what());
    }
}

inline std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return os.str();
}

inline std::string fmt(std::complex<double> z) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? " - " : " + ")
       << std::abs(z.imag()) << "i";
    return os.str();
}

inline json cjson(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

// Exact rational from text such as "1/3" or "0.25".
inline Rational to_rational(const std::string& text) {
    const ClassicalPolynomial c = parse_classical(text);
    const HbarScalar v = c.coefficient(0, 0);
    if (c.terms().size() > 1 || !v.is_constant() || !v.coefficient(0).is_real())
        throw ParseError("expected a real rational constant", 0);
    return v.coefficient(0).real();
}

inline Rule parse_rule(const std::string& text) {
    if (text == "bj") return BornJordan{};
    if (text == "weyl") return Weyl{};
    if (text.rfind("tau=", 0) == 0) {
        try {
            return Tau{TauParameter(to_rational(text.substr(4)))};
        } catch (const ParseError&) {
            throw ValidationError("tau value must be a rational number, got '" + text.substr(4) + "'");
        }
    }
    throw ValidationError("unknown rule '" + text + "' (expected bj, weyl, tau=<r> or diff)");
}

inline void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out.empty())
        out << text;
    else
        write_text_file(c.out, text);
}

inline void require_symbol(const RunConfig& c) {
    if (c.symbol.empty()) throw ValidationError("a symbol expression is required (--symbol)");
}

inline void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (c.format == a) return;
    throw ValidationError("unsupported --format '" + c.format + "' for this command");
}

inline int cmd_quantize(const RunConfig& c, std::ostream& out) {
    require_symbol(c);
    require_format(c, {"text", "json"});
    const ClassicalPolynomial poly = parse_classical(c.symbol);
    const NCPolynomial diff = bj_weyl_gap(poly);
    NCPolynomial result = c.rule == "diff" ? diff : quantize_polynomial(poly, parse_rule(c.rule));
    if (c.format == "json") {
        json j = {{"symbol", to_string(poly)}, {"rule", c.rule}, {"canonical", to_string(result)}};
        if (c.with_diff) j["bj_minus_weyl"] = to_string(diff);
        emit(c, j.dump(2) + "\n", out);
    } else {
        std::string text = to_string(result) + "\n";
        if (c.with_diff && c.rule != "diff") text += "bj - weyl: " + to_string(diff) + "\n";
        emit(c, text, out);
    }
    return Ok;
}

inline int cmd_kernel(const RunConfig& c, std::ostream& out) {
    require_symbol(c);
    require_format(c, {"text", "json", "csv"});
    const GridSpec grid = c.grid();
    const SampledSymbol a = SampledSymbol::from_expression(c.symbol);
    std::vector<std::pair<std::string, OperatorMatrix>> mats;
    if (c.rule == "both" || c.rule == "bj") mats.emplace_back("bj", bj_kernel_quantize(a, grid, c.quadrature_order, c.threads));
    if (c.rule == "both" || c.rule == "weyl") mats.emplace_back("weyl", weyl_kernel_quantize(a, grid, c.threads));
    if (c.rule.rfind("tau=", 0) == 0) {
        const double tau = to_double(std::get<Tau>(parse_rule(c.rule)).tau.value());
        mats.emplace_back(c.rule, tau_kernel_quantize(a, tau, grid, c.threads));
    }
    if (mats.empty()) throw ValidationError("unknown rule '" + c.rule + "' (expected bj, weyl, both or tau=<r>)");

    for (const auto& [name, m] : mats) out << "hermitian_residual[" << name << "]: " << fmt(m.hermitian_residual()) << "\n";
    if (mats.size() == 2) out << "relative_frobenius_gap: " << fmt(relative_frobenius(mats[0].second, mats[1].second)) << "\n";

    if (!c.out.empty()) {
        if (c.format == "csv") {
            if (mats.size() != 1) throw ValidationError("CSV output holds a single matrix; choose one rule");
            std::ostringstream os;
            write_csv(os, mats[0].second);
            write_text_file(c.out, os.str());
        } else {
            json j = mats.size() == 1 ? to_json(mats[0].second) : json{{"bj", to_json(mats[0].second)}, {"weyl", to_json(mats[1].second)}};
            write_text_file(c.out, j.dump() + "\n");
        }
    }
    return Ok;
}

inline int cmd_wigner(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json", "csv"});
    const GridSpec grid = c.grid();
    const StateVector pre = StateVector::gaussian(grid, c.pre.q0, c.pre.p0, c.pre.sigma);
    const StateVector post = c.has_post ? StateVector::gaussian(grid, c.post.q0, c.post.p0, c.post.sigma) : pre;
    const bool bj = c.rule == "bj";
    if (!bj && c.rule != "weyl") throw ValidationError("wigner rule must be weyl or bj");
    const PhaseSpaceFunction w = bj ? cross_wigner_bj(pre, post) : cross_wigner(pre, post);
    out << "integral: " << fmt(w.integral()) << "\n";
    out << "overlap <post|pre>: " << fmt(inner(post, pre)) << "\n";
    if (!c.out.empty()) {
        std::ostringstream os;
        if (c.format == "csv")
            write_csv(os, w);
        else
            os << to_json(w).dump() << "\n";
        write_text_file(c.out, os.str());
    }
    return Ok;
}

inline json weak_values_for(const PhaseSpaceFunction& table, const OperatorMatrix& m_w,
                            const OperatorMatrix& m_bj, const StateVector& post, const StateVector& pre) {
    const auto op_w = weak_value(m_w, post, pre);
    const auto op_bj = weak_value(m_bj, post, pre);
    const auto ps_w = weak_value_phase_space(table, post, pre, KernelRule::Weyl);
    const auto ps_bj = weak_value_phase_space(table, post, pre, KernelRule::BornJordan);
    return {{"operator", {{"weyl", cjson(op_w)}, {"bj", cjson(op_bj)}, {"bj_minus_weyl", cjson(op_bj - op_w)}}},
            {"phase_space", {{"weyl", cjson(ps_w)}, {"bj", cjson(ps_bj)}, {"bj_minus_weyl", cjson(ps_bj - ps_w)}}},
            {"pipeline_gap", std::max(std::abs(op_w - ps_w), std::abs(op_bj - ps_bj))}};
}

inline int cmd_weakvalue(const RunConfig& c, std::ostream& out) {
    require_symbol(c);
    require_format(c, {"text", "json"});
    const GridSpec grid = c.grid();
    const SampledSymbol a = SampledSymbol::from_expression(c.symbol);
    const StateVector pre = StateVector::gaussian(grid, c.pre.q0, c.pre.p0, c.pre.sigma);
    const StateVector post = StateVector::gaussian(grid, c.post.q0, c.post.p0, c.post.sigma);
    require_non_orthogonal(post, pre, inner(post, pre));
    const PhaseSpaceFunction table = a.tabulate(grid);
    const OperatorMatrix m_w = weyl_kernel_quantize(a, grid, c.threads);
    const OperatorMatrix m_bj = bj_kernel_quantize(a, grid, c.quadrature_order, c.threads);
    json result = weak_values_for(table, m_w, m_bj, post, pre);

    json pairs = json::array();
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> centre(-1.0, 1.0), width(0.4, 0.7);
    for (int k = 0; k < c.random_pairs; ++k) {
        GaussianSpec gp{centre(rng), centre(rng), width(rng)}, gq{centre(rng), centre(rng), width(rng)};
        const StateVector rp = StateVector::gaussian(grid, gp.q0, gp.p0, gp.sigma);
        const StateVector rq = StateVector::gaussian(grid, gq.q0, gq.p0, gq.sigma);
        json entry = weak_values_for(table, m_w, m_bj, rq, rp);
        entry["pre"] = gaussian_to_json(gp);
        entry["post"] = gaussian_to_json(gq);
        pairs.push_back(entry);
    }

    if (c.format == "json") {
        json j = {{"config", to_json(c)}, {"result", result}};
        if (c.random_pairs > 0) j["random_pairs"] = pairs;
        emit(c, j.dump(2) + "\n", out);
        return Ok;
    }
    auto z = [](const json& v) { return fmt(std::complex<double>(v[0].get<double>(), v[1].get<double>())); };
    std::ostringstream os;
    os << "operator     weyl: " << z(result["operator"]["weyl"]) << "\n";
    os << "operator     bj:   " << z(result["operator"]["bj"]) << "\n";
    os << "operator     bj - weyl: " << z(result["operator"]["bj_minus_weyl"]) << "\n";
    os << "phase-space  weyl: " << z(result["phase_space"]["weyl"]) << "\n";
    os << "phase-space  bj:   " << z(result["phase_space"]["bj"]) << "\n";
    os << "phase-space  bj - weyl: " << z(result["phase_space"]["bj_minus_weyl"]) << "\n";
    os << "pipeline gap: " << fmt(result["pipeline_gap"].get<double>()) << "\n";
    for (const auto& p : pairs)
        os << "pair bj - weyl: " << z(p["operator"]["bj_minus_weyl"]) << "  pipeline gap: " << fmt(p["pipeline_gap"].get<double>())
           << "\n";
    emit(c, os.str(), out);
    return Ok;
}

inline int cmd_evolve(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_symbol(c);
    require_format(c, {"text", "csv", "json"});
    const GridSpec grid = c.grid();
    const ClassicalPolynomial poly = parse_classical(c.symbol);
    const StateVector pre = StateVector::gaussian(grid, c.pre.q0, c.pre.p0, c.pre.sigma);
    const DivergenceReport report =
        divergence_experiment(poly, pre, c.horizon, c.samples, KernelOptions{c.quadrature_order, c.threads});
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    std::ostringstream os;
    if (c.format == "json") {
        json j = to_json(report);
        j["config"] = to_json(c);
        os << j.dump(2) << "\n";
    } else {
        write_csv(os, report);
    }
    emit(c, os.str(), out);
    if (!c.out.empty() && c.format != "json") {
        out << "gap: " << (report.gap.central ? "central" : "non-central") << " (" << to_string(report.gap.symbolic_gap) << ")\n";
        out << "max |<q>_bj - <q>_weyl|: " << fmt(report.max_abs_gap()) << "\n";
    }
    return Ok;
}

inline int cmd_demo_dequantization(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    const DequantizationWitness w = dequantization_witness(c.grid(), c.multiple, c.quadrature_order, c.threads);
    if (c.format == "json") {
        json j = {{"q0", w.q0}, {"p0", w.p0}, {"q_steps", w.q_steps}, {"p_steps", w.p_steps}, {"theta", w.theta},
                  {"norm_bj", w.norm_bj}, {"norm_weyl", w.norm_weyl}, {"ratio", w.ratio}};
        emit(c, j.dump(2) + "\n", out);
        return Ok;
    }
    std::ostringstream os;
    os << "symbol: cos((p0*q - q0*p)/h) with q0 = " << fmt(w.q0) << ", p0 = " << fmt(w.p0) << "\n";
    os << "q0*p0/(2*pi*h): " << fmt(w.q0 * w.p0 / (2.0 * std::numbers::pi * c.hbar)) << "\n";
    os << "theta: " << fmt(w.theta) << "\n";
    os << "norm_weyl: " << fmt(w.norm_weyl) << "\n";
    os << "norm_bj: " << fmt(w.norm_bj) << "\n";
    os << "ratio: " << fmt(w.ratio) << "\n";
    emit(c, os.str(), out);
    return Ok;
}

struct IdentityRow {
    std::string name;
    int passed = 0;
    int total = 0;
};

inline std::vector<IdentityRow> run_identity_suites(std::uint64_t seed) {
    std::vector<IdentityRow> rows;
    IdentityRow power{"power identity, 1 <= m,n <= 5"};
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n, ++power.total) power.passed += check_power_identity(m, n);
    rows.push_back(power);

    IdentityRow equal{"bj == weyl, min(s,r) <= 1, s+r <= 8"}, differ{"bj != weyl, 2 <= s,r <= 4"},
        avg{"tau average == bj, s+r <= 8"}, qform{"q-form == p-form, s+r <= 8"}, motion{"motion identities, s,r <= 4"};
    for (int s = 0; s <= 8; ++s)
        for (int r = 0; s + r <= 8; ++r) {
            const ClassicalMonomial m(s, r);
            const NCPolynomial bj = bj_quantize(m);
            if (std::min(s, r) <= 1) {
                ++equal.total;
                equal.passed += bj == weyl_quantize(m);
            }
            ++avg.total;
            avg.passed += bj_from_tau_average(m) == bj;
            ++qform.total;
            qform.passed += bj_quantize_qform(m) == bj;
        }
    for (int s = 2; s <= 4; ++s)
        for (int r = 2; r <= 4; ++r, ++differ.total) differ.passed += !(bj_quantize({s, r}) == weyl_quantize({s, r}));
    for (int s = 0; s <= 4; ++s)
        for (int r = 0; r <= 4; ++r, ++motion.total) motion.passed += check_motion_identities({s, r}).both_zero();
    rows.insert(rows.end(), {equal, differ, avg, qform, motion});

    IdentityRow confluence{"confluence under random rewrite orders"};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 20; ++k, ++confluence.total) {
        std::vector<Letter> letters(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 8)(rng)));
        for (auto& l : letters) l = std::bernoulli_distribution(0.5)(rng) ? Letter::P : Letter::Q;
        const NCPolynomial w{Word(letters)};
        confluence.passed += normal_order(w, random_rewrite(rng())) == normal_order(w, rightmost_rewrite());
    }
    rows.push_back(confluence);
    return rows;
}

inline int cmd_check_identities(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    const auto rows = run_identity_suites(c.seed);
    bool all = true;
    json j = json::array();
    std::ostringstream os;
    for (const auto& r : rows) {
        const bool ok = r.passed == r.total;
        all = all && ok;
        os << (ok ? "PASS  " : "FAIL  ") << std::setw(3) << r.passed << "/" << std::left << std::setw(3) << r.total << std::right
           << "  " << r.name << "\n";
        j.push_back({{"name", r.name}, {"passed", r.passed}, {"total", r.total}});
    }
    emit(c, c.format == "json" ? json{{"suites", j}, {"all_passed", all}}.dump(2) + "\n" : os.str(), out);
    return all ? Ok : IdentityFailure;
}

// Finds --config PATH / --config=PATH before the main parse so explicit flags can override it.
inline std::string find_config_path(int argc, const char* const* argv) {
    for (int k = 1; k < argc; ++k) {
        const std::string a = argv[k];
        if (a == "--config" && k + 1 < argc) return argv[k + 1];
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return {};
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        const std::string config_path = find_config_path(argc, argv);
        if (!config_path.empty()) apply_config_json(cfg, parse_json_text(read_text_file(config_path)));
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return IoFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ValidationFailure;
    }

    CLI::App app{"Born-Jordan / Weyl / tau quantization toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path, pre_text, post_text;
    app.add_option("--config", config_path, "JSON run configuration (flags override it)");
    app.add_option("--format", cfg.format, "Output format: text, json or csv");
    app.add_option("--out", cfg.out, "Output file");
    app.add_option("--threads", cfg.threads, "Worker threads for matrix builds")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for randomized checks");
    app.add_option("-N,--points", cfg.n, "Grid points (power of two >= 16)");
    app.add_option("-L,--half-width", cfg.l, "Grid half-width");
    app.add_option("--hbar", cfg.hbar, "Value of hbar");
    app.add_option("--quadrature-order", cfg.quadrature_order, "Gauss-Legendre order for the tau average");

    auto* quantize = app.add_subcommand("quantize", "Exact quantization of a polynomial symbol");
    quantize->add_option("expr", cfg.symbol, "Polynomial in p, q, h, i");
    quantize->add_option("--rule", cfg.rule, "bj, weyl, tau=<r> or diff");
    quantize->add_flag("--with-diff", cfg.with_diff, "Also print BJ - Weyl");

    auto* kernel = app.add_subcommand("kernel", "Kernel (matrix) quantization on the grid");
    kernel->add_option("--symbol,expr", cfg.symbol, "Symbol expression");
    kernel->add_option("--rule", cfg.rule, "bj, weyl, both or tau=<r>");

    auto* wigner = app.add_subcommand("wigner", "Cross-Wigner transform of Gaussian states");
    wigner->add_option("--pre", pre_text, "Pre-selected state q0,p0,sigma");
    wigner->add_option("--post", post_text, "Post-selected state q0,p0,sigma");
    wigner->add_option("--rule", cfg.rule, "weyl or bj (Theta-filtered)");

    auto* weak = app.add_subcommand("weakvalue", "Weyl and Born-Jordan weak values");
    weak->add_option("--symbol,expr", cfg.symbol, "Symbol expression");
    weak->add_option("--pre", pre_text, "Pre-selected state q0,p0,sigma");
    weak->add_option("--post", post_text, "Post-selected state q0,p0,sigma");
    weak->add_option("--random-pairs", cfg.random_pairs, "Additional seeded random Gaussian pairs");

    auto* evolve = app.add_subcommand("evolve", "BJ vs Weyl dynamics divergence report");
    evolve->add_option("--symbol,expr", cfg.symbol, "Polynomial Hamiltonian symbol");
    evolve->add_option("--pre", pre_text, "Initial state q0,p0,sigma");
    evolve->add_option("--horizon", cfg.horizon, "Final time");
    evolve->add_option("--samples", cfg.samples, "Number of sample times");

    auto* demo = app.add_subcommand("demo-dequantization", "Non-injectivity witness for Born-Jordan quantization");
    demo->add_option("--multiple", cfg.multiple, "q0*p0 in units of 2*pi*h (1 lands on the zero set)");

    auto* identities = app.add_subcommand("check-identities", "Run the exact algebraic identity suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : ValidationFailure;
    }

    try {
        if (!pre_text.empty()) cfg.pre = parse_gaussian(pre_text);
        if (!post_text.empty()) {
            cfg.post = parse_gaussian(post_text);
            cfg.has_post = true;
        }
        if (quantize->parsed()) return cmd_quantize(cfg, out);
        if (kernel->parsed()) return cmd_kernel(cfg, out);
        if (wigner->parsed()) return cmd_wigner(cfg, out);
        if (weak->parsed()) return cmd_weakvalue(cfg, out);
        if (evolve->parsed()) return cmd_evolve(cfg, out, err);
        if (demo->parsed()) return cmd_demo_dequantization(cfg, out);
        if (identities->parsed()) return cmd_check_identities(cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return ValidationFailure;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return ValidationFailure;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return NumericalFailure;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return IoFailure;
    }
    return ValidationFailure;
}

}  // namespace bjq::cli
