#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hzoo/diffops.hpp"
#include "hzoo/poly.hpp"
#include "hzoo/rational.hpp"

namespace hzoo {

/// prod_{1<=i<j<=d} (x_i - x_j): degree d(d-1)/2, d! terms, coefficients +-1.
inline RatPoly vandermonde(int d) {
    if (d < 2) throw std::invalid_argument("vandermonde: need d >= 2");
    RatPoly v = RatPoly::one(d);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            v *= RatPoly::variable(d, i) - RatPoly::variable(d, j);
        }
    }
    return v;
}

/// prod_{1<=i<j<=d} (x_i^2 - x_j^2): the Vandermonde polynomial in squared
/// coordinates. Harmonic, homogeneous of degree d(d-1), and zero wherever
/// two coordinates agree up to sign -- in particular on the (d-2)-skeleton
/// of the unit cube.
inline RatPoly squared_vandermonde(int d) {
    if (d < 2) throw std::invalid_argument("squared_vandermonde: need d >= 2");
    std::map<int, RatPoly> squares;
    for (int i = 0; i < d; ++i) {
        const RatPoly xi = RatPoly::variable(d, i);
        squares.emplace(i, xi * xi);
    }
    return substitute(vandermonde(d), squares);
}

/// x1*...*xd * squared_vandermonde(d): harmonic, homogeneous of degree d^2,
/// and zero on the (d-1)-skeleton as well as all coordinate hyperplanes.
inline RatPoly squared_vandermonde_times_coords(int d) {
    RatPoly p = squared_vandermonde(d);  // validates d
    for (int i = 0; i < d; ++i) p *= RatPoly::variable(d, i);
    return p;
}

/// e^{x1+...+xd} * vandermonde(d): a Laplace eigenfunction with eigenvalue d.
inline ExpPoly exp_weighted_vandermonde(int d) {
    RatPoly body = vandermonde(d);  // validates d
    return ExpPoly(std::vector<Rational>(static_cast<std::size_t>(d), Rational(1)),
                   std::move(body));
}

/// A pair of real polynomials forming a harmonic morphism R^m -> R^2:
/// both components harmonic, gradients of equal norm and orthogonal.
struct MorphismPair {
    RatPoly phi1;
    RatPoly phi2;

    MorphismPair(RatPoly p1, RatPoly p2) : phi1(std::move(p1)), phi2(std::move(p2)) {
        if (phi1.arity() != phi2.arity())
            throw std::invalid_argument("MorphismPair: components disagree on arity");
    }

    int arity() const { return phi1.arity(); }
};

/// The quadratic morphism R^{2n} -> R^2:
///   phi1 = x1^2 - x2^2 + x3^2 - x4^2 + ... + x_{2n-1}^2 - x_{2n}^2
///   phi2 = 2 x1 x2 + 2 x3 x4 + ... + 2 x_{2n-1} x_{2n}
/// i.e. z -> z^2 summed over consecutive coordinate pairs read as complex
/// numbers.
inline MorphismPair quadratic_morphism(int n) {
    if (n < 1) throw std::invalid_argument("quadratic_morphism: need n >= 1");
    const int m = 2 * n;
    RatPoly phi1(m);
    RatPoly phi2(m);
    for (int j = 0; j < n; ++j) {
        const RatPoly a = RatPoly::variable(m, 2 * j);
        const RatPoly b = RatPoly::variable(m, 2 * j + 1);
        phi1 += a * a - b * b;
        phi2 += a * b * Rational(2);
    }
    return {std::move(phi1), std::move(phi2)};
}

/// Real parts of the odd powers (phi1 + i*phi2)^{2k+1}, k = 0..k_max.
/// Each member is harmonic, divisible by phi1, of degree exactly 4k+2, and
/// carries a coefficient of absolute value 1 on every monomial x_i^{4k+2}.
inline std::vector<RatPoly> quadratic_morphism_powers(int n, int k_max) {
    if (k_max < 0) throw std::invalid_argument("quadratic_morphism_powers: need k_max >= 0");
    const MorphismPair phi = quadratic_morphism(n);
    const GaussPoly w =
        complexify(phi.phi1) + complexify(phi.phi2) * GaussRational::unit_imaginary();
    std::vector<RatPoly> family;
    family.reserve(static_cast<std::size_t>(k_max) + 1);
    GaussPoly power = w;       // w^{2k+1}, advanced by w^2 each step
    const GaussPoly w2 = w * w;
    for (int k = 0; k <= k_max; ++k) {
        family.push_back(real_imag(power).first);
        if (k < k_max) power *= w2;
    }
    return family;
}

/// Builds (1 - G, i(1 + G), -2 g_1, ..., -2 g_L) with G = sum g_j^2 from
/// univariate Gaussian-rational polynomials g_j. The result xi satisfies
/// sum_j xi_j^2 == 0 identically: (1-G)^2 - (1+G)^2 + 4G = 0.
inline std::vector<GaussPoly> isotropic_vector(const std::vector<GaussPoly>& g) {
    if (g.empty()) throw std::invalid_argument("isotropic_vector: empty input");
    for (const auto& gj : g) {
        if (gj.arity() != 1)
            throw std::invalid_argument("isotropic_vector: inputs must be univariate");
    }
    GaussPoly big_g(1);
    for (const auto& gj : g) big_g += gj * gj;
    const GaussPoly one = GaussPoly::one(1);
    std::vector<GaussPoly> xi;
    xi.reserve(g.size() + 2);
    xi.push_back(one - big_g);
    xi.push_back((one + big_g) * GaussRational::unit_imaginary());
    for (const auto& gj : g) xi.push_back(gj * GaussRational(-2));
    return xi;
}

/// Harmonic morphism R^m -> R^2 for odd m >= 5, built from the isotropic
/// vector of the supplied g (length m-4, univariate in z):
///   phi1 + i*phi2 = sum_{j=1}^{m-2} xi_j(z) * x_j  with  z = x_{m-1} + i x_m.
inline MorphismPair odd_morphism(int m, const std::vector<GaussPoly>& g) {
    if (m < 5 || m % 2 == 0)
        throw std::invalid_argument("odd_morphism: need odd m >= 5");
    if (static_cast<int>(g.size()) != m - 4)
        throw std::invalid_argument("odd_morphism: need exactly m-4 entries in g, got " +
                                    std::to_string(g.size()));
    const std::vector<GaussPoly> xi = isotropic_vector(g);

    // z = x_{m-1} + i x_m as an arity-m Gaussian polynomial.
    GaussPoly z = complexify(RatPoly::variable(m, m - 2)) +
                  complexify(RatPoly::variable(m, m - 1)) * GaussRational::unit_imaginary();
    const std::map<int, GaussPoly> binding{{0, std::move(z)}};

    GaussPoly f(m);
    for (int j = 0; j < m - 2; ++j) {
        f += substitute(xi[static_cast<std::size_t>(j)], binding) *
             complexify(RatPoly::variable(m, j));
    }
    auto [re, im] = real_imag(f);
    return {std::move(re), std::move(im)};
}

enum class TrigKind { sin, cos, sinh };

inline std::string_view name_of(TrigKind k) {
    switch (k) {
        case TrigKind::sin: return "sin";
        case TrigKind::cos: return "cos";
        default: return "sinh";
    }
}

/// One factor kind(frequency * x_{variable+1}) with nonzero rational
/// frequency.
struct TrigFactor {
    TrigKind kind;
    Rational frequency;
    int variable;

    TrigFactor(TrigKind k, Rational f, int var) : kind(k), frequency(std::move(f)), variable(var) {
        if (frequency == 0) throw std::invalid_argument("TrigFactor: zero frequency");
    }

    double evaluate(double x) const {
        const double ax = static_cast<double>(frequency) * x;
        switch (kind) {
            case TrigKind::sin: return std::sin(ax);
            case TrigKind::cos: return std::cos(ax);
            default: return std::sinh(ax);
        }
    }

    /// Contribution to the Laplacian eigenvalue: -a^2 for sin/cos, +a^2 for
    /// sinh.
    Rational eigenvalue_term() const {
        const Rational a2 = frequency * frequency;
        return kind == TrigKind::sinh ? a2 : -a2;
    }
};

/// Separable product with exactly one factor per variable x1..xd. The
/// Laplacian eigenvalue is the exact rational sum of the per-factor terms;
/// the product is harmonic iff that sum is zero.
struct TrigProduct {
    std::vector<TrigFactor> factors;

    explicit TrigProduct(std::vector<TrigFactor> fs) : factors(std::move(fs)) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].variable != static_cast<int>(i))
                throw std::invalid_argument("TrigProduct: factor i must act on x_{i+1}");
        }
    }

    int dimension() const { return static_cast<int>(factors.size()); }

    Rational eigenvalue() const {
        Rational s(0);
        for (const auto& f : factors) s += f.eigenvalue_term();
        return s;
    }

    bool is_harmonic() const { return eigenvalue() == 0; }

    double evaluate(const std::vector<double>& x) const {
        if (x.size() != factors.size())
            throw std::invalid_argument("TrigProduct::evaluate: wrong point dimension");
        double v = 1.0;
        for (std::size_t i = 0; i < factors.size(); ++i) v *= factors[i].evaluate(x[i]);
        return v;
    }
};

inline std::string to_string(const TrigProduct& t) {
    std::string out;
    for (const auto& f : t.factors) {
        if (!out.empty()) out += "*";
        out += std::string(name_of(f.kind)) + "(";
        if (!(f.frequency == 1)) out += to_string(f.frequency) + "*";
        out += "x" + std::to_string(f.variable + 1) + ")";
    }
    return out;
}

/// sin(a_1 x_1) * ... * sin(a_{d-1} x_{d-1}) * sinh(a_d x_d).
/// Exact eigenvalue a_d^2 - (a_1^2 + ... + a_{d-1}^2); harmonic iff the
/// last frequency squared equals the sum of the others squared.
inline TrigProduct sin_sinh_product(const std::vector<Rational>& freqs) {
    if (freqs.size() < 2)
        throw std::invalid_argument("sin_sinh_product: need at least 2 frequencies");
    std::vector<TrigFactor> fs;
    fs.reserve(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        const bool last = (i + 1 == freqs.size());
        fs.emplace_back(last ? TrigKind::sinh : TrigKind::sin, freqs[i], static_cast<int>(i));
    }
    return TrigProduct(std::move(fs));
}

/// Real and imaginary parts of prod_j (z - p_j) written in z = x1 + i x2.
/// Both are harmonic; their common zero set contains every input point.
struct PlanarVanisher {
    RatPoly re;
    RatPoly im;
};

inline PlanarVanisher planar_vanisher(const std::vector<GaussRational>& points) {
    GaussPoly z = complexify(RatPoly::variable(2, 0)) +
                  complexify(RatPoly::variable(2, 1)) * GaussRational::unit_imaginary();
    GaussPoly prod = GaussPoly::one(2);
    for (const auto& p : points) prod *= z - GaussPoly::constant(2, p);
    auto [re, im] = real_imag(prod);
    return {std::move(re), std::move(im)};
}

/// Closed-form harmonic function on the planar half-strip
/// {0 <= x2, -pi/2 <= x1 <= pi/2} vanishing on its boundary. Evaluation
/// reports no value when the denominator sin(x1)cosh(x2) + R, with
/// R = sqrt(sin^2 x1 + sinh^2 x2), is within eps_den of zero; the printed
/// formula is undefined on those rays.
class HalfStripFunction {
public:
    explicit HalfStripFunction(double eps_den = 1e-9) : eps_den_(eps_den) {}

    std::optional<double> operator()(double x1, double x2) const {
        const double s = std::sin(x1);
        const double c = std::cos(x1);
        const double sh = std::sinh(x2);
        const double ch = std::cosh(x2);
        const double r = std::sqrt(s * s + sh * sh);
        const double den = s * ch + r;
        if (std::abs(den) < eps_den_) return std::nullopt;
        const double main = c * sh * r / den;
        const double corr = 1.0 + (c * c * sh * sh) / (den * den);
        return main / corr;
    }

    double eps_den() const { return eps_den_; }

private:
    double eps_den_;
};

inline HalfStripFunction half_strip_function(double eps_den = 1e-9) {
    return HalfStripFunction(eps_den);
}

/// e^{x1} sin(x2): harmonic on the plane, zero on the lines x2 = 0 and
/// x2 = pi bounding the full strip.
inline double strip_exponential(double x1, double x2) {
    return std::exp(x1) * std::sin(x2);
}

/// sinh(x1) sin(x2): same boundary lines, additionally zero on x1 = 0.
inline double strip_sinh(double x1, double x2) {
    return std::sinh(x1) * std::sin(x2);
}

inline std::pair<std::function<double(double, double)>, std::function<double(double, double)>>
strip_functions() {
    return {strip_exponential, strip_sinh};
}

}  // namespace hzoo
