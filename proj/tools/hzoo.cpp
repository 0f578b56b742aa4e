// hzoo command-line front end: generators for the harmonic-function zoo and
// machine-checkable certificates for their claimed identities.
//
// Exit codes: 0 every requested certificate passed, 1 a certificate failed,
// 2 usage error.

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hzoo/constructions.hpp"
#include "hzoo/diffops.hpp"
#include "hzoo/expr.hpp"
#include "hzoo/geometry.hpp"
#include "hzoo/numerics.hpp"
#include "hzoo/report.hpp"
#include "hzoo/verify.hpp"
#include "hzoo/version.hpp"

namespace {

using namespace hzoo;
using nlohmann::json;

struct OutputOptions {
    std::string out_path;  // empty = stdout
    bool as_json = false;
    bool no_timestamp = false;
};

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void emit(const OutputOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(opts.out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + opts.out_path);
    os << text;
    if (!text.empty() && text.back() != '\n') os << '\n';
}

json report_json(const Certificate& cert, const OutputOptions& opts) {
    json j = to_json(cert);
    if (!opts.no_timestamp) j["generated_at"] = iso_timestamp();
    return j;
}

/// Emits certificates (single report object, or {"reports": [...]} for
/// several) and returns the process exit code.
int emit_certificates(const std::vector<Certificate>& certs, const OutputOptions& opts,
                      const std::string& preamble = {}) {
    const bool all_pass =
        std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.passed; });
    if (opts.as_json) {
        json j;
        if (certs.size() == 1) {
            j = report_json(certs[0], opts);
        } else {
            j["reports"] = json::array();
            for (const auto& c : certs) j["reports"].push_back(to_json(c));
            j["tool_version"] = kToolVersion;
            if (!opts.no_timestamp) j["generated_at"] = iso_timestamp();
        }
        emit(opts, j.dump(2));
    } else {
        std::string text = preamble;
        for (const auto& c : certs) text += render_text(c);
        emit(opts, text);
    }
    return all_pass ? 0 : 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& part : split(s, ',')) {
        if (part.empty()) throw std::invalid_argument("empty entry in rational list");
        out.push_back(rational_from_string(part));
    }
    return out;
}

/// "re,im;re,im;..." with rational components.
std::vector<GaussRational> parse_gauss_points(const std::string& s) {
    std::vector<GaussRational> out;
    for (const auto& pair : split(s, ';')) {
        const auto comps = split(pair, ',');
        if (comps.size() != 2)
            throw std::invalid_argument("point must be 're,im': '" + pair + "'");
        out.emplace_back(rational_from_string(comps[0]), rational_from_string(comps[1]));
    }
    return out;
}

/// Comma-separated univariate polynomials in z with rational coefficients,
/// e.g. "z^2+1,z,1". The variable z is an alias for x1.
std::vector<GaussPoly> parse_g_list(const std::string& s) {
    std::vector<GaussPoly> out;
    for (auto part : split(s, ',')) {
        if (part.empty()) throw std::invalid_argument("empty entry in g list");
        std::string rewritten;
        for (char c : part) {
            if (c == 'z') {
                rewritten += "x1";
            } else {
                rewritten += c;
            }
        }
        out.push_back(complexify(parse_poly(rewritten, 1)));
    }
    return out;
}

std::vector<GaussPoly> default_g(int m) {
    const GaussPoly z = GaussPoly::variable(1, 0);
    const std::vector<GaussPoly> cycle{z, GaussPoly::one(1), z * z};
    std::vector<GaussPoly> g;
    for (int i = 0; i < m - 4; ++i) g.push_back(cycle[static_cast<std::size_t>(i) % 3]);
    return g;
}

Certificate trig_harmonic_certificate(const TrigProduct& t) {
    detail::Digest dg;
    dg.feed("trig-harmonic").feed(to_string(t));
    const Rational eig = t.eigenvalue();
    const bool ok = eig == 0;
    std::vector<Subcase> sub{{"eigenvalue-zero", ok, "eigenvalue " + to_string(eig)}};
    return detail::assemble("trig-harmonic", dg.hex(), std::move(sub),
                            ok ? std::nullopt : std::make_optional("eigenvalue " + to_string(eig)));
}

Certificate planar_vanishing_certificate(const PlanarVanisher& pv,
                                         const std::vector<GaussRational>& points) {
    detail::Digest dg;
    dg.feed("planar-vanishing").feed(to_string(pv.re)).feed(to_string(pv.im));
    std::vector<Subcase> sub;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::vector<Rational> at{points[i].re, points[i].im};
        dg.feed(to_string(points[i]));
        const Rational re = eval_exact(pv.re, at);
        const Rational im = eval_exact(pv.im, at);
        const bool ok = re == 0 && im == 0;
        sub.push_back({"point[" + std::to_string(i) + "]=(" + to_string(points[i].re) + "," +
                           to_string(points[i].im) + ")",
                       ok, ok ? "" : "re=" + to_string(re) + " im=" + to_string(im)});
    }
    return detail::assemble("planar-vanishing", dg.hex(), std::move(sub));
}

MorphismPair select_morphism(int pairs, int odd_dim, const std::string& g_text) {
    if ((pairs > 0) == (odd_dim > 0))
        throw std::invalid_argument("choose exactly one of --pairs and --odd-dim");
    if (pairs > 0) return quadratic_morphism(pairs);
    const std::vector<GaussPoly> g = g_text.empty() ? default_g(odd_dim) : parse_g_list(g_text);
    return odd_morphism(odd_dim, g);
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

int run_gen(const std::string& kind, int dim, int pairs, int kmax, const std::string& g_text,
            const std::string& freqs, const std::string& points_text, const std::string& check,
            const OutputOptions& opts) {
    std::vector<std::string> objects;
    std::vector<Certificate> certs;
    json extra;

    if (kind == "fd" || kind == "gd" || kind == "vandermonde") {
        const RatPoly p = kind == "fd"            ? squared_vandermonde(dim)
                          : kind == "gd"          ? squared_vandermonde_times_coords(dim)
                                                  : vandermonde(dim);
        objects.push_back(to_string(p));
        if (check == "harmonic") certs.push_back(check_harmonic(p));
    } else if (kind == "hd") {
        const ExpPoly h = exp_weighted_vandermonde(dim);
        objects.push_back(to_string(h));
        if (check == "eigen") certs.push_back(check_eigenfunction(h, Rational(dim)));
    } else if (kind == "phi") {
        const MorphismPair m = quadratic_morphism(pairs);
        objects.push_back(to_string(m.phi1));
        objects.push_back(to_string(m.phi2));
        if (check == "harmonic") {
            certs.push_back(check_harmonic(m.phi1));
            certs.push_back(check_harmonic(m.phi2));
        } else if (check == "conformal") {
            certs.push_back(check_conformality(m));
        }
    } else if (kind == "pk") {
        const auto family = quadratic_morphism_powers(pairs, kmax);
        for (const auto& p : family) objects.push_back(to_string(p));
        if (check == "harmonic") {
            for (const auto& p : family) certs.push_back(check_harmonic(p));
        }
    } else if (kind == "odd-morphism") {
        const std::vector<GaussPoly> g = g_text.empty() ? default_g(dim) : parse_g_list(g_text);
        const MorphismPair m = odd_morphism(dim, g);
        objects.push_back(to_string(m.phi1));
        objects.push_back(to_string(m.phi2));
        if (check == "harmonic") {
            certs.push_back(check_harmonic(m.phi1));
            certs.push_back(check_harmonic(m.phi2));
        } else if (check == "conformal") {
            certs.push_back(check_conformality(m));
        }
    } else if (kind == "psi") {
        if (freqs.empty()) throw std::invalid_argument("gen psi requires --freqs");
        const TrigProduct t = sin_sinh_product(parse_rational_list(freqs));
        objects.push_back(to_string(t));
        extra["eigenvalue"] = to_string(t.eigenvalue());
        if (check == "harmonic") certs.push_back(trig_harmonic_certificate(t));
    } else if (kind == "planar") {
        if (points_text.empty()) throw std::invalid_argument("gen planar requires --points");
        const auto points = parse_gauss_points(points_text);
        const PlanarVanisher pv = planar_vanisher(points);
        objects.push_back(to_string(pv.re));
        objects.push_back(to_string(pv.im));
        if (check == "harmonic") {
            certs.push_back(check_harmonic(pv.re));
            certs.push_back(check_harmonic(pv.im));
        } else if (check == "vanishing") {
            certs.push_back(planar_vanishing_certificate(pv, points));
        }
    } else {
        throw std::invalid_argument("unknown gen kind: " + kind);
    }

    if (!certs.empty() && !opts.as_json) {
        std::string preamble;
        for (const auto& o : objects) preamble += o + '\n';
        return emit_certificates(certs, opts, preamble);
    }
    if (!certs.empty()) return emit_certificates(certs, opts);

    if (opts.as_json) {
        json j;
        j["kind"] = kind;
        j["objects"] = objects;
        for (auto& [k, v] : extra.items()) j[k] = v;
        j["tool_version"] = kToolVersion;
        if (!opts.no_timestamp) j["generated_at"] = iso_timestamp();
        emit(opts, j.dump(2));
    } else {
        std::string text;
        for (const auto& o : objects) text += o + '\n';
        if (extra.contains("eigenvalue"))
            text += "eigenvalue: " + extra["eigenvalue"].get<std::string>() + '\n';
        emit(opts, text);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// halfstrip / strip suites
// ---------------------------------------------------------------------------

Certificate boundary_certificate(const std::string& claim,
                                 const std::vector<BoundarySegment>& segments, int samples,
                                 const BoundaryReport& report) {
    detail::Digest dg;
    dg.feed(claim).feed(std::to_string(samples)).feed(detail::format_double(report.tolerance));
    for (const auto& seg : segments) dg.feed(seg.id);
    std::vector<Subcase> sub{
        {"max-abs", report.passed,
         "max |f| = " + detail::format_double(report.max_abs) + " over " +
             std::to_string(report.valid_samples) + " samples (" +
             std::to_string(report.skipped_samples) + " skipped), tol " +
             detail::format_double(report.tolerance)}};
    return detail::assemble(claim, dg.hex(), std::move(sub));
}

template <typename Fn>
Certificate fd_residual_certificate(const std::string& claim, const Fn& f,
                                    const std::vector<std::vector<double>>& pts, double h,
                                    double bound) {
    detail::Digest dg;
    dg.feed(claim).feed(std::to_string(pts.size())).feed(detail::format_double(h)).feed(
        detail::format_double(bound));
    double worst = 0.0;
    int skipped = 0;
    for (const auto& p : pts) {
        const std::optional<double> r = fd_laplacian(f, p, h);
        if (!r) {
            ++skipped;
            continue;
        }
        worst = std::max(worst, std::abs(*r));
    }
    const bool ok = worst <= bound;
    std::vector<Subcase> sub{{"fd-residual", ok,
                              "max |fd laplacian| = " + detail::format_double(worst) + " at h=" +
                                  detail::format_double(h) + " over " +
                                  std::to_string(pts.size() - skipped) + " points, bound " +
                                  detail::format_double(bound)}};
    return detail::assemble(claim, dg.hex(), std::move(sub));
}

template <typename Fn>
Certificate richardson_certificate(const std::string& claim, const Fn& f,
                                   const std::vector<std::vector<double>>& pts, double h) {
    detail::Digest dg;
    dg.feed(claim).feed(detail::format_double(h));
    for (const auto& p : pts)
        for (double c : p) dg.feed(detail::format_double(c));
    std::vector<Subcase> sub;
    for (const auto& p : pts) {
        const std::optional<double> r1 = fd_laplacian(f, p, h);
        const std::optional<double> r2 = fd_laplacian(f, p, h / 2);
        std::string id = "point(";
        for (std::size_t i = 0; i < p.size(); ++i)
            id += (i ? "," : "") + detail::format_double(p[i]);
        id += ")";
        if (!r1 || !r2 || *r2 == 0.0) {
            sub.push_back({id, false, "invalid sample"});
            continue;
        }
        const double ratio = *r1 / *r2;
        const bool ok = ratio >= 3.5 && ratio <= 4.5;
        sub.push_back({id, ok, "residual ratio " + detail::format_double(ratio)});
    }
    return detail::assemble(claim, dg.hex(), std::move(sub));
}

std::vector<std::vector<double>> random_box_points(std::size_t count, double x_lo, double x_hi,
                                                   double y_lo, double y_hi) {
    std::mt19937 rng(20240311);
    std::uniform_real_distribution<double> ux(x_lo, x_hi);
    std::uniform_real_distribution<double> uy(y_lo, y_hi);
    std::vector<std::vector<double>> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.push_back({ux(rng), uy(rng)});
    return pts;
}

int run_halfstrip(int samples, double tol, double fd_bound, double fd_h, double eps_den,
                  const OutputOptions& opts) {
    const HalfStripFunction f0(eps_den);
    const auto field = [&](const std::vector<double>& x) { return f0(x[0], x[1]); };
    const double pi = std::acos(-1.0);

    std::vector<BoundarySegment> segments{
        {"x1=pi/2, x2 in [0,3]", [pi](double t) { return std::array<double, 2>{pi / 2, 3 * t}; }},
        {"x2=0, x1 in [0,pi/2]",
         [pi](double t) { return std::array<double, 2>{t * pi / 2, 0.0}; }},
    };
    std::vector<Certificate> certs;
    certs.push_back(boundary_certificate("halfstrip-boundary", segments, samples,
                                         boundary_scan(field, segments, samples, tol)));
    certs.push_back(fd_residual_certificate("halfstrip-fd-residual", field,
                                            random_box_points(50, -1.0, 1.4, 0.1, 2.0), fd_h,
                                            fd_bound));
    certs.push_back(richardson_certificate("halfstrip-richardson", field,
                                           {{0.4, 0.6}, {-0.3, 0.9}, {1.0, 1.2}}, 4e-3));
    return emit_certificates(certs, opts);
}

int run_strip(int samples, double tol, double fd_bound, double fd_h, const OutputOptions& opts) {
    const double pi = std::acos(-1.0);
    std::vector<Certificate> certs;
    const auto add = [&](const std::string& name, auto fn) {
        const auto field = [fn](const std::vector<double>& x) { return fn(x[0], x[1]); };
        std::vector<BoundarySegment> segments{
            {"x2=0, x1 in [-2,2]", [](double t) { return std::array<double, 2>{4 * t - 2, 0.0}; }},
            {"x2=pi, x1 in [-2,2]",
             [pi](double t) { return std::array<double, 2>{4 * t - 2, pi}; }},
        };
        certs.push_back(boundary_certificate(name + "-boundary", segments, samples,
                                             boundary_scan(field, segments, samples, tol)));
        certs.push_back(fd_residual_certificate(name + "-fd-residual", field,
                                                random_box_points(50, -2.0, 2.0, 0.3, 2.8), fd_h,
                                                fd_bound));
        certs.push_back(
            richardson_certificate(name + "-richardson", field, {{0.5, 1.0}, {-1.0, 2.0}}, 4e-3));
    };
    add("strip-exp-sin", strip_exponential);
    add("strip-sinh-sin", strip_sinh);
    return emit_certificates(certs, opts);
}

// ---------------------------------------------------------------------------
// nodal
// ---------------------------------------------------------------------------

int run_nodal(const std::string& poly_kind, const std::string& expr, int dim, int arity, int res,
              const std::string& csv_out, const OutputOptions& opts) {
    RatPoly p(0);
    std::string function_id;
    if (!expr.empty()) {
        if (arity < 1) throw std::invalid_argument("nodal --expr requires --arity");
        p = parse_poly(expr, arity);
        function_id = expr;
    } else {
        if (dim < 2) throw std::invalid_argument("nodal requires --dim >= 2");
        p = poly_kind == "gd" ? squared_vandermonde_times_coords(dim) : squared_vandermonde(dim);
        function_id = poly_kind + "(dim=" + std::to_string(dim) + ")";
    }
    const int d = p.arity();
    if (d > 4) throw std::invalid_argument("nodal: dimension capped at 4");

    GridSpec grid;
    grid.lo.assign(static_cast<std::size_t>(d), -0.5);
    grid.hi.assign(static_cast<std::size_t>(d), 0.5);
    grid.resolution = res;
    const PolyEvaluator ev(p);
    const NodalCloud cloud =
        nodal_sample([&](const std::vector<double>& x) { return ev(x); }, grid, function_id);

    const auto csv_string = [&] {
        std::ostringstream os;
        write_csv(cloud, os);
        return os.str();
    };

    if (opts.as_json) {
        json j;
        j["function"] = cloud.function_id;
        j["dimension"] = cloud.dimension;
        j["resolution"] = grid.resolution;
        j["points"] = cloud.points.size();
        j["invalid_nodes"] = cloud.invalid_nodes;
        j["skipped_edges"] = cloud.skipped_edges;
        j["tool_version"] = kToolVersion;
        if (!opts.no_timestamp) j["generated_at"] = iso_timestamp();
        if (!csv_out.empty()) {
            std::ofstream os(csv_out, std::ios::binary);
            if (!os) throw std::invalid_argument("cannot open CSV output: " + csv_out);
            write_csv(cloud, os);
            j["csv"] = csv_out;
        }
        emit(opts, j.dump(2));
    } else if (!csv_out.empty()) {
        std::ofstream os(csv_out, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open CSV output: " + csv_out);
        write_csv(cloud, os);
    } else {
        emit(opts, csv_string());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hzoo: exact harmonic-function constructions and machine-checked certificates"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json/--out/--no-timestamp after the subcommand too

    OutputOptions opts;
    app.add_flag("--json", opts.as_json, "emit JSON reports");
    app.add_option("--out", opts.out_path, "write primary output to this path (default stdout)");
    app.add_flag("--no-timestamp", opts.no_timestamp,
                 "omit generated_at so identical runs are byte-identical");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a construction (optionally with a check)");
    std::string gen_kind, gen_g, gen_freqs, gen_points, gen_check;
    int gen_dim = 0, gen_pairs = 1, gen_kmax = 0;
    gen->add_option("kind", gen_kind, "one of fd|gd|hd|vandermonde|phi|pk|odd-morphism|psi|planar")
        ->required()
        ->check(CLI::IsMember(
            {"fd", "gd", "hd", "vandermonde", "phi", "pk", "odd-morphism", "psi", "planar"}));
    gen->add_option("--dim", gen_dim, "ambient dimension d (fd|gd|hd|vandermonde|odd-morphism)");
    gen->add_option("--pairs", gen_pairs, "number of coordinate pairs n (phi|pk)");
    gen->add_option("--kmax", gen_kmax, "largest k for the pk family");
    gen->add_option("--g", gen_g, "comma-separated univariate polynomials in z (odd-morphism)");
    gen->add_option("--freqs", gen_freqs, "comma-separated rational frequencies (psi)");
    gen->add_option("--points", gen_points, "semicolon-separated re,im rational points (planar)");
    gen->add_option("--check", gen_check, "attach a certificate")
        ->check(CLI::IsMember({"harmonic", "eigen", "conformal", "vanishing"}));

    // verify
    auto* verify = app.add_subcommand("verify", "check harmonicity of a parsed polynomial");
    std::string verify_expr;
    int verify_arity = 0;
    verify->add_option("--arity", verify_arity, "number of variables")->required();
    verify->add_option("--expr", verify_expr, "polynomial text, e.g. \"x1^2 - x2^2\"")->required();

    // skeleton
    auto* skeleton = app.add_subcommand("skeleton", "check vanishing on the k-skeleton of Q_d");
    std::string skel_poly = "fd", skel_expr;
    int skel_dim = 0, skel_k = -1;
    skeleton->add_option("--dim", skel_dim, "cube dimension d")->required();
    skeleton->add_option("--k", skel_k, "skeleton dimension k (default d-2)");
    skeleton->add_option("--poly", skel_poly, "generator to test: fd|gd")
        ->check(CLI::IsMember({"fd", "gd"}));
    skeleton->add_option("--expr", skel_expr, "polynomial text to test instead of a generator");

    // divides
    auto* divides = app.add_subcommand("divides", "check exact divisibility over the pk family");
    int div_pairs = 1, div_kmax = 3;
    std::string div_divisor;
    divides->add_option("--pairs", div_pairs, "n for the pk family");
    divides->add_option("--kmax", div_kmax, "largest k in the family");
    divides->add_option("--divisor", div_divisor,
                        "divisor expression in 2n variables (default phi1)");

    // independent
    auto* independent = app.add_subcommand("independent", "check exact linear independence");
    int ind_pairs = 0, ind_kmax = 3, ind_arity = 0;
    std::vector<std::string> ind_exprs;
    independent->add_option("--pairs", ind_pairs, "use the pk family for this n");
    independent->add_option("--kmax", ind_kmax, "largest k in the pk family");
    independent->add_option("--arity", ind_arity, "arity for --expr members");
    independent->add_option("--expr", ind_exprs, "family member (repeatable)");

    // conformal
    auto* conformal = app.add_subcommand("conformal", "check the harmonic-morphism identities");
    int conf_pairs = 0, conf_odd = 0;
    std::string conf_g;
    conformal->add_option("--pairs", conf_pairs, "quadratic morphism with n pairs");
    conformal->add_option("--odd-dim", conf_odd, "odd-dimension morphism in R^m");
    conformal->add_option("--g", conf_g, "g polynomials for --odd-dim");

    // compose
    auto* compose = app.add_subcommand("compose", "pull a 2-variable polynomial back and check");
    std::string comp_expr, comp_g;
    int comp_pairs = 0, comp_odd = 0;
    compose->add_option("--expr", comp_expr, "outer polynomial in x1,x2")->required();
    compose->add_option("--pairs", comp_pairs, "quadratic morphism with n pairs");
    compose->add_option("--odd-dim", comp_odd, "odd-dimension morphism in R^m");
    compose->add_option("--g", comp_g, "g polynomials for --odd-dim");

    // nodal
    auto* nodal = app.add_subcommand("nodal", "sample a nodal set on a grid, export CSV");
    std::string nodal_poly = "fd", nodal_expr, nodal_csv;
    int nodal_dim = 0, nodal_arity = 0, nodal_res = 41;
    nodal->add_option("--poly", nodal_poly, "generator: fd|gd")->check(CLI::IsMember({"fd", "gd"}));
    nodal->add_option("--dim", nodal_dim, "dimension for the generator");
    nodal->add_option("--expr", nodal_expr, "polynomial text instead of a generator");
    nodal->add_option("--arity", nodal_arity, "arity for --expr");
    nodal->add_option("--res", nodal_res, "grid resolution per axis (default 41)");
    nodal->add_option("--csv-out", nodal_csv, "CSV path when --json occupies stdout");

    // halfstrip / strip
    auto* halfstrip = app.add_subcommand("halfstrip", "numeric checks for the half-strip function");
    int hs_samples = 200;
    double hs_tol = 1e-10, hs_bound = 1e-5, hs_h = 1e-3, hs_eps = 1e-9;
    halfstrip->add_option("--samples", hs_samples, "boundary samples per piece (default 200)");
    halfstrip->add_option("--tol", hs_tol, "boundary tolerance (default 1e-10)");
    halfstrip->add_option("--fd-bound", hs_bound, "FD residual bound (default 1e-5)");
    halfstrip->add_option("--fd-h", hs_h, "FD step (default 1e-3)");
    halfstrip->add_option("--eps-den", hs_eps,
                          "denominator guard for the domain flag (default 1e-9)");

    auto* strip = app.add_subcommand("strip", "numeric checks for the strip functions");
    int st_samples = 200;
    double st_tol = 1e-10, st_bound = 1e-5, st_h = 1e-3;
    strip->add_option("--samples", st_samples, "boundary samples per piece (default 200)");
    strip->add_option("--tol", st_tol, "boundary tolerance (default 1e-10)");
    strip->add_option("--fd-bound", st_bound, "FD residual bound (default 1e-5)");
    strip->add_option("--fd-h", st_h, "FD step (default 1e-3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            return run_gen(gen_kind, gen_dim, gen_pairs, gen_kmax, gen_g, gen_freqs, gen_points,
                           gen_check, opts);
        }
        if (verify->parsed()) {
            const RatPoly p = parse_poly(verify_expr, verify_arity);
            return emit_certificates({check_harmonic(p)}, opts);
        }
        if (skeleton->parsed()) {
            const int k = skel_k >= 0 ? skel_k : skel_dim - 2;
            const RatPoly p = !skel_expr.empty() ? parse_poly(skel_expr, skel_dim)
                              : skel_poly == "gd" ? squared_vandermonde_times_coords(skel_dim)
                                                  : squared_vandermonde(skel_dim);
            return emit_certificates({check_skeleton_vanishing(p, skel_dim, k)}, opts);
        }
        if (divides->parsed()) {
            const auto family = quadratic_morphism_powers(div_pairs, div_kmax);
            const RatPoly divisor = div_divisor.empty()
                                        ? quadratic_morphism(div_pairs).phi1
                                        : parse_poly(div_divisor, 2 * div_pairs);
            return emit_certificates({check_divides_family(divisor, family)}, opts);
        }
        if (independent->parsed()) {
            std::vector<RatPoly> family;
            if (ind_pairs > 0) {
                family = quadratic_morphism_powers(ind_pairs, ind_kmax);
            } else {
                if (ind_exprs.empty() || ind_arity < 1)
                    throw std::invalid_argument(
                        "independent: need --pairs or (--arity and --expr ...)");
                for (const auto& e : ind_exprs) family.push_back(parse_poly(e, ind_arity));
            }
            return emit_certificates({check_linear_independence(family)}, opts);
        }
        if (conformal->parsed()) {
            return emit_certificates({check_conformality(select_morphism(conf_pairs, conf_odd,
                                                                         conf_g))},
                                     opts);
        }
        if (compose->parsed()) {
            const MorphismPair m = select_morphism(comp_pairs, comp_odd, comp_g);
            const RatPoly p2 = parse_poly(comp_expr, 2);
            return emit_certificates({check_composition(p2, m)}, opts);
        }
        if (nodal->parsed()) {
            return run_nodal(nodal_poly, nodal_expr, nodal_dim, nodal_arity, nodal_res, nodal_csv,
                             opts);
        }
        if (halfstrip->parsed())
            return run_halfstrip(hs_samples, hs_tol, hs_bound, hs_h, hs_eps, opts);
        if (strip->parsed()) return run_strip(st_samples, st_tol, st_bound, st_h, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
