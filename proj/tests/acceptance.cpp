// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Tolerances and thresholds are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "hzoo/constructions.hpp"
#include "hzoo/diffops.hpp"
#include "hzoo/expr.hpp"
#include "hzoo/geometry.hpp"
#include "hzoo/numerics.hpp"
#include "hzoo/verify.hpp"
#include "hzoo/version.hpp"

#include "support/oracles.hpp"

using namespace hzoo;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += message;
        }
    }

    void note(const std::string& message) {
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
};

// --- CLI helpers ------------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HZOO_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// --- criteria ---------------------------------------------------------------

Outcome criterion1_exact_harmonicity() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    for (int d = 2; d <= 7; ++d) {
        const RatPoly f = squared_vandermonde(d);
        out.require(laplacian(f).is_zero(), "laplacian(f_" + std::to_string(d) + ") != 0");
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds <= 60.0, "runtime exceeded 60 s");
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "d = 2..7 exact, " << seconds << " s";
    out.note(os.str());
    return out;
}

Outcome criterion2_skeleton_vanishing() {
    Outcome out;
    const std::vector<std::size_t> expected_faces{12, 24, 40, 60};
    for (int d = 3; d <= 6; ++d) {
        const Certificate cert = check_skeleton_vanishing(squared_vandermonde(d), d, d - 2);
        out.require(cert.passed, "f_" + std::to_string(d) + " fails on its (d-2)-skeleton");
        out.require(cert.subcases.size() == expected_faces[static_cast<std::size_t>(d - 3)],
                    "face count mismatch for d=" + std::to_string(d));
    }
    const Certificate negative = check_skeleton_vanishing(squared_vandermonde(3), 3, 2);
    out.require(!negative.passed, "negative control: f_3 must fail on the 2-skeleton");
    out.note("faces 12/24/40/60 all vanish exactly; f_3 2-skeleton control fails as required");
    return out;
}

Outcome criterion3_remarks() {
    Outcome out;
    for (int d = 2; d <= 5; ++d) {
        out.require(laplacian(squared_vandermonde_times_coords(d)).is_zero(),
                    "laplacian(g_" + std::to_string(d) + ") != 0");
    }
    for (int d = 2; d <= 6; ++d) {
        out.require(check_eigenfunction(exp_weighted_vandermonde(d), Rational(d)).passed,
                    "eigen relation fails for h_" + std::to_string(d));
        const std::vector<Rational> ones(static_cast<std::size_t>(d), Rational(1));
        out.require(dir_derivative(vandermonde(d), ones).is_zero(),
                    "all-ones directional derivative of V_" + std::to_string(d) + " != 0");
    }
    out.note("g_d harmonic (d=2..5), eigenvalue d for h_d and translation identity (d=2..6)");
    return out;
}

Outcome criterion4_konig_identity() {
    Outcome out;
    oracles::Rng rng(777);
    bool stated_identity_holds = true;
    std::string first_failure;
    for (int d = 2; d <= 6; ++d) {
        const RatPoly v = vandermonde(d);
        for (int iter = 0; iter < 20; ++iter) {
            const Rational a = rng.rational();
            const Rational b = rng.rational();
            const Rational c = rng.rational();
            if (!konig_operator(v, a, b, c).is_zero()) {
                stated_identity_holds = false;
                if (first_failure.empty()) {
                    const RatPoly residual = konig_operator(v, a, b, c);
                    const auto ratio = try_divide(residual, v);
                    first_failure = "konig(V_" + std::to_string(d) +
                                    ", a, b, c) == " + (ratio ? to_string(*ratio) : "?") +
                                    " * V_" + std::to_string(d) + ", not 0";
                }
            }
        }
        if (!konig_operator(v, Rational(0), Rational(0), make_rational(1, 2)).is_zero()) {
            stated_identity_holds = false;
        }
    }
    out.require(stated_identity_holds,
                "stated annihilation fails for d >= 3: " + first_failure +
                    " (exact eigenvalue d(d-1)(d-2)/3 for every triple; only d=2 annihilates)");

    // chain-rule identity as stated, with the squared weight y_i^2
    bool chain_rule_as_stated = true;
    for (int d = 2; d <= 5; ++d) {
        const RatPoly v = vandermonde(d);
        std::map<int, RatPoly> squares;
        for (int i = 0; i < d; ++i) {
            const RatPoly xi = RatPoly::variable(d, i);
            squares.emplace(i, xi * xi);
        }
        RatPoly bracket(d);
        for (int i = 0; i < d; ++i) {
            const RatPoly xi = RatPoly::variable(d, i);
            bracket += xi * xi * partial(partial(v, i), i) * Rational(4);
            bracket += partial(v, i) * Rational(2);
        }
        const RatPoly lhs = laplacian(substitute(v, squares));
        const RatPoly rhs = substitute(bracket, squares);
        if (!(lhs == rhs)) chain_rule_as_stated = false;
    }
    out.require(chain_rule_as_stated,
                "chain-rule identity with y_i^2 weights fails for d >= 3 (the first-order "
                "chain rule carries weight y_i, under which both sides vanish exactly)");
    return out;
}

Outcome criterion5_even_family() {
    Outcome out;
    for (int n = 1; n <= 3; ++n) {
        const auto family = quadratic_morphism_powers(n, 3);
        const RatPoly phi1 = quadratic_morphism(n).phi1;
        for (int k = 0; k <= 3; ++k) {
            const RatPoly& pk = family.at(static_cast<std::size_t>(k));
            const std::string tag = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
            out.require(laplacian(pk).is_zero(), "P_k not harmonic at " + tag);
            const auto q = try_divide(pk, phi1);
            out.require(q.has_value(), "phi1 does not divide P_k at " + tag);
            if (q) out.require(*q * phi1 == pk, "re-multiplication mismatch at " + tag);
            out.require(pk.total_degree() == 4 * k + 2, "degree != 4k+2 at " + tag);
            for (int i = 0; i < 2 * n; ++i) {
                const Rational c =
                    pk.coefficient_of_power(i, static_cast<std::uint32_t>(4 * k + 2));
                out.require(c == 1 || c == -1, "coefficient of x_i^(4k+2) not unimodular at " +
                                                   tag);
            }
        }
        const Certificate indep = check_linear_independence(family);
        out.require(indep.passed, "family not linearly independent for n=" + std::to_string(n));
        const std::vector<std::string> degrees{"degree 2", "degree 6", "degree 10", "degree 14"};
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            out.require(indep.subcases.at(i).detail == degrees[i],
                        "degree sequence mismatch for n=" + std::to_string(n));
        }
    }
    out.note("n=1..3, k=0..3: harmonic, divisible with exact re-multiplication, degrees "
             "(2,6,10,14), unimodular leading coordinate powers");
    return out;
}

Outcome criterion6_odd_family() {
    Outcome out;
    const GaussPoly z = GaussPoly::variable(1, 0);
    const GaussPoly one = GaussPoly::one(1);
    const RatPoly u2_minus_v2 = parse_poly("x1^2 - x2^2", 2);
    const RatPoly re_cube = parse_poly("x1^3 - 3*x1*x2^2", 2);

    const std::vector<std::pair<int, std::vector<GaussPoly>>> cases{
        {5, {one}},
        {5, {z}},
        {5, {z * z + one}},
        {7, {one, one, one}},
        {7, {z, one, z * z}},
    };
    for (const auto& [m, g] : cases) {
        const std::string tag = "m=" + std::to_string(m);
        GaussPoly xi_square_sum(1);
        for (const auto& component : isotropic_vector(g)) {
            xi_square_sum += component * component;
        }
        out.require(xi_square_sum.is_zero(), "sum xi_j^2 != 0 at " + tag);

        const MorphismPair morphism = odd_morphism(m, g);
        out.require(laplacian(morphism.phi1).is_zero(), "phi1 not harmonic at " + tag);
        out.require(laplacian(morphism.phi2).is_zero(), "phi2 not harmonic at " + tag);
        out.require(check_conformality(morphism).passed, "conformality fails at " + tag);
        out.require(check_composition(u2_minus_v2, morphism).passed,
                    "composition with u^2 - v^2 fails at " + tag);
        out.require(check_composition(re_cube, morphism).passed,
                    "composition with u^3 - 3uv^2 fails at " + tag);
    }
    out.note("m in {5,7}, constant and degree-<=2 g choices; isotropy, harmonicity, "
             "conformality and both compositions exact");
    return out;
}

Outcome criterion7_divides_and_zero_set() {
    Outcome out;
    const MorphismPair m1 = quadratic_morphism(1);
    const auto family = quadratic_morphism_powers(1, 3);
    out.require(check_divides_family(m1.phi1, family).passed, "divisibility fails");

    std::vector<std::vector<Rational>> probes;
    for (int t = 1; t <= 5; ++t) {
        probes.push_back({Rational(t), Rational(t)});
        probes.push_back({Rational(t), Rational(-t)});
    }
    probes.push_back({make_rational(1, 2), make_rational(1, 2)});
    probes.push_back({make_rational(-3, 2), make_rational(3, 2)});
    out.require(probes.size() >= 10, "need at least 10 probes");
    out.require(common_zero_witness(m1.phi1, family, probes).passed,
                "a family member does not vanish on the probe set");
    out.note(std::to_string(probes.size()) + " probes on {x1 = +-x2}, all members vanish");
    return out;
}

Outcome criterion8_numeric_suite() {
    Outcome out;
    const double pi = std::acos(-1.0);
    const HalfStripFunction f0;
    const auto f0_field = [&](const std::vector<double>& x) { return f0(x[0], x[1]); };

    // boundary pieces, 200 samples each, eps_den-invalid samples excluded
    const std::vector<BoundarySegment> pieces{
        {"x1=pi/2", [pi](double t) { return std::array<double, 2>{pi / 2, 3.0 * t}; }},
        {"x2=0", [pi](double t) { return std::array<double, 2>{t * pi / 2, 0.0}; }},
    };
    const BoundaryReport boundary = boundary_scan(f0_field, pieces, 200, 1e-10);
    out.require(boundary.passed, "half-strip boundary max |f| above 1e-10");
    out.require(boundary.skipped_samples >= 1, "expected at least one eps_den-invalid sample");

    // 50 interior points with x2 >= 0.1, fd residual bound 1e-5 at h = 1e-3
    std::mt19937 rng(20240311);
    std::uniform_real_distribution<double> ux(-1.0, 1.4);
    std::uniform_real_distribution<double> uy(0.1, 2.0);
    double worst = 0.0;
    int evaluated = 0;
    for (int i = 0; i < 50; ++i) {
        const std::vector<double> pt{ux(rng), uy(rng)};
        const auto r = fd_laplacian(f0_field, pt, 1e-3);
        if (!r) continue;
        ++evaluated;
        worst = std::max(worst, std::abs(*r));
    }
    out.require(evaluated == 50, "interior points unexpectedly invalid");
    out.require(worst <= 1e-5, "half-strip fd residual above 1e-5");

    // Richardson ratios in [3.5, 4.5]
    const auto richardson_ok = [&](const auto& field, const std::vector<double>& pt) {
        const auto r1 = fd_laplacian(field, pt, 4e-3);
        const auto r2 = fd_laplacian(field, pt, 2e-3);
        if (!r1 || !r2 || *r2 == 0.0) return false;
        const double ratio = *r1 / *r2;
        return ratio >= 3.5 && ratio <= 4.5;
    };
    for (const auto& pt : {std::vector<double>{0.4, 0.6}, std::vector<double>{-0.3, 0.9},
                           std::vector<double>{1.0, 1.2}}) {
        out.require(richardson_ok(f0_field, pt), "half-strip Richardson ratio out of [3.5,4.5]");
    }

    // strip functions: same residual bound and ratio window
    const auto exp_field = [](const std::vector<double>& x) {
        return strip_exponential(x[0], x[1]);
    };
    const auto sinh_field = [](const std::vector<double>& x) { return strip_sinh(x[0], x[1]); };
    std::uniform_real_distribution<double> sx(-2.0, 2.0);
    std::uniform_real_distribution<double> sy(-3.0, 3.0);
    for (int which = 0; which < 2; ++which) {
        double strip_worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const std::vector<double> pt{sx(rng), sy(rng)};
            const auto r = which == 0 ? fd_laplacian(exp_field, pt, 1e-3)
                                      : fd_laplacian(sinh_field, pt, 1e-3);
            strip_worst = std::max(strip_worst, std::abs(r.value()));
        }
        out.require(strip_worst <= 1e-5,
                    std::string(which == 0 ? "exp" : "sinh") + " strip residual above 1e-5");
    }
    out.require(richardson_ok(exp_field, {0.5, 1.0}), "exp strip Richardson ratio off");
    out.require(richardson_ok(sinh_field, {-1.0, 2.0}), "sinh strip Richardson ratio off");

    // exact eigenvalues of the sin/sinh products
    out.require(sin_sinh_product({Rational(3), Rational(4), Rational(5)}).eigenvalue() == 0,
                "psi(3,4,5) eigenvalue != 0");
    out.require(sin_sinh_product({Rational(1), Rational(1), Rational(1)}).eigenvalue() ==
                    Rational(-1),
                "psi(1,1,1) eigenvalue != -1");

    std::ostringstream os;
    os.precision(3);
    os << std::scientific << "boundary max " << boundary.max_abs << " (" << boundary.skipped_samples
       << " invalid skipped), worst interior fd residual " << worst;
    out.note(os.str());
    return out;
}

Outcome criterion9_nodal_cloud() {
    Outcome out;
    const PolyEvaluator ev(squared_vandermonde(3));
    GridSpec grid;
    grid.lo = {-0.5, -0.5, -0.5};
    grid.hi = {0.5, 0.5, 0.5};
    grid.resolution = 41;
    const NodalCloud cloud =
        nodal_sample([&](const std::vector<double>& x) { return ev(x); }, grid, "f3");

    out.require(!cloud.points.empty(), "cloud is empty");

    bool sound = true;
    const auto positive = [](double v) { return v >= 0.0; };
    for (const auto& p : cloud.points) {
        if (p.from_node) {
            if (ev(p.x) != 0.0) sound = false;
        } else if (positive(ev(p.endpoint_a)) == positive(ev(p.endpoint_b))) {
            sound = false;
        }
    }
    out.require(sound, "sign-change soundness check failed");

    const double cell = 1.0 / 40.0;
    bool near_diag = false;
    bool near_antidiag = false;
    for (const auto& p : cloud.points) {
        if (std::abs(p.x[0] - p.x[1]) / std::sqrt(2.0) <= cell) near_diag = true;
        if (std::abs(p.x[0] + p.x[1]) / std::sqrt(2.0) <= cell) near_antidiag = true;
        if (near_diag && near_antidiag) break;
    }
    out.require(near_diag, "no points within one cell width of the plane x1 = x2");
    out.require(near_antidiag, "no points within one cell width of the plane x1 = -x2");
    out.note(std::to_string(cloud.points.size()) + " points, all sound, planes x1 = +-x2 hit");
    return out;
}

Outcome criterion10_infrastructure() {
    Outcome out;

    // parser fuzz: 10^4 inputs, never crash
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len_dist(0, 64);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    const std::string structured = "x0123456789/^*()-+ \t\n";
    std::uniform_int_distribution<std::size_t> sdist(0, structured.size() - 1);
    int accepted = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::string input;
        const int len = len_dist(rng);
        for (int i = 0; i < len; ++i) {
            input += iter % 2 == 0 ? structured[sdist(rng)] : static_cast<char>(byte_dist(rng));
        }
        const ParseResult r = parse(input, 3);
        if (r.ok()) {
            ++accepted;
            (void)lower(*r.ast, 3);
        }
    }
    out.require(accepted > 0, "fuzz produced no valid inputs at all");

    // round trip on every generated construction
    const auto round_trips = [&](const RatPoly& p) {
        return parse_poly(to_string(p), p.arity()) == p;
    };
    for (int d = 2; d <= 7; ++d) {
        out.require(round_trips(vandermonde(d)), "round trip fails: vandermonde " +
                                                     std::to_string(d));
        out.require(round_trips(squared_vandermonde(d)), "round trip fails: f_" +
                                                             std::to_string(d));
    }
    for (int d = 2; d <= 5; ++d) {
        out.require(round_trips(squared_vandermonde_times_coords(d)),
                    "round trip fails: g_" + std::to_string(d));
    }
    for (int d = 2; d <= 6; ++d) {
        out.require(round_trips(exp_weighted_vandermonde(d).body),
                    "round trip fails: h_" + std::to_string(d) + " body");
    }
    for (int n = 1; n <= 3; ++n) {
        const MorphismPair m = quadratic_morphism(n);
        out.require(round_trips(m.phi1) && round_trips(m.phi2),
                    "round trip fails: phi n=" + std::to_string(n));
        for (const auto& pk : quadratic_morphism_powers(n, 3)) {
            out.require(round_trips(pk), "round trip fails: pk n=" + std::to_string(n));
        }
    }
    {
        const GaussPoly z = GaussPoly::variable(1, 0);
        for (const auto& m : {odd_morphism(5, {z}), odd_morphism(7, {z, GaussPoly::one(1), z * z})}) {
            out.require(round_trips(m.phi1) && round_trips(m.phi2),
                        "round trip fails: odd morphism");
        }
        const auto pv = planar_vanisher({GaussRational::unit_imaginary(), GaussRational(2)});
        out.require(round_trips(pv.re) && round_trips(pv.im), "round trip fails: planar");
    }

    // CLI exit codes
    out.require(run_cli("gen fd --dim 3 --check harmonic").exit_code == 0,
                "gen fd --check harmonic should exit 0");
    out.require(run_cli("verify --arity 2 --expr \"x1^2\"").exit_code == 1,
                "verify on a non-harmonic polynomial should exit 1");
    out.require(run_cli("gen fd --dim 1").exit_code == 2, "gen fd --dim 1 should exit 2");
    out.require(run_cli("--definitely-not-an-option").exit_code == 2,
                "unknown option should exit 2");
    out.require(run_cli("skeleton --dim 4 --k 2 --poly fd").exit_code == 0,
                "skeleton --dim 4 --k 2 should exit 0");

    // the skeleton report carries one subcase per face
    const CliResult skel = run_cli("--json --no-timestamp skeleton --dim 4 --k 2 --poly fd");
    out.require(skel.exit_code == 0, "json skeleton run failed");
    try {
        const auto j = nlohmann::json::parse(skel.output);
        out.require(j.at("verdict") == "pass", "skeleton verdict not pass");
        out.require(j.at("subcases").size() == 24, "skeleton subcase count != 24");
        out.require(j.at("tool_version").get<std::string>() == kToolVersion,
                    "tool_version missing");
    } catch (const std::exception& e) {
        out.require(false, std::string("skeleton JSON unparseable: ") + e.what());
    }

    // witness lands in the report
    const CliResult witness = run_cli("--json --no-timestamp verify --arity 2 --expr \"x1^2\"");
    out.require(witness.exit_code == 1, "witness run should exit 1");
    try {
        const auto j = nlohmann::json::parse(witness.output);
        out.require(j.at("verdict") == "fail", "expected fail verdict");
        out.require(j.at("witness") == "2", "expected witness \"2\"");
    } catch (const std::exception& e) {
        out.require(false, std::string("witness JSON unparseable: ") + e.what());
    }

    // byte-identical reports across two runs
    for (const std::string& args :
         {std::string("--json --no-timestamp skeleton --dim 3 --k 1 --poly gd"),
          std::string("--json --no-timestamp gen pk --pairs 2 --kmax 2 --check harmonic"),
          std::string("--json --no-timestamp halfstrip")}) {
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        out.require(first.exit_code == second.exit_code && first.output == second.output,
                    "reports differ between identical runs: " + args);
    }
    out.note("fuzz 10^4 inputs crash-free (" + std::to_string(accepted) +
             " accepted), round trips exact, CLI exit codes and determinism verified");
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        std::string title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "exact harmonicity of f_d, d=2..7, within 60 s", criterion1_exact_harmonicity},
        {2, "skeleton vanishing for f_d, d=3..6, with negative control",
         criterion2_skeleton_vanishing},
        {3, "g_d harmonic, h_d eigenfunction, translation identity", criterion3_remarks},
        {4, "second-order annihilation identity with free constants", criterion4_konig_identity},
        {5, "even-dimension family: divisibility, degrees, independence",
         criterion5_even_family},
        {6, "odd-dimension morphisms: isotropy, conformality, compositions",
         criterion6_odd_family},
        {7, "divisibility and common-zero probes together", criterion7_divides_and_zero_set},
        {8, "half-strip and strip numerics, sin/sinh eigenvalues", criterion8_numeric_suite},
        {9, "nodal cloud of f_3 at resolution 41", criterion9_nodal_cloud},
        {10, "parser fuzz, round trips, CLI exit codes, determinism",
         criterion10_infrastructure},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.note(std::string("exception: ") + e.what());
        }
        if (!outcome.pass) ++failures;
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
                  << c.title;
        if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
