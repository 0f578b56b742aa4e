#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hzoo/poly.hpp"
#include "hzoo/rational.hpp"

namespace hzoo {

/// Sum of second partials over all coordinates. A zero result certifies
/// harmonicity exactly.
template <typename F>
Poly<F> laplacian(const Poly<F>& p) {
    Poly<F> r(p.arity());
    for (int i = 0; i < p.arity(); ++i) r += partial(partial(p, i), i);
    return r;
}

template <typename F>
std::vector<Poly<F>> gradient(const Poly<F>& p) {
    std::vector<Poly<F>> g;
    g.reserve(static_cast<std::size_t>(p.arity()));
    for (int i = 0; i < p.arity(); ++i) g.push_back(partial(p, i));
    return g;
}

/// Sum_i v_i * dp/dx_i.
template <typename F>
Poly<F> dir_derivative(const Poly<F>& p, const std::vector<F>& v) {
    if (static_cast<int>(v.size()) != p.arity())
        throw std::invalid_argument("dir_derivative: direction length != arity");
    Poly<F> r(p.arity());
    for (int i = 0; i < p.arity(); ++i) {
        const auto& vi = v[static_cast<std::size_t>(i)];
        if (detail::is_zero_coeff(vi)) continue;
        r += partial(p, i) * vi;
    }
    return r;
}

/// The second-order operator
///   sum_i (x_i^2 + a*x_i + b) d^2p/dx_i^2 + c * sum_i dp/dx_i
/// with free constants, applied exactly.
inline RatPoly konig_operator(const RatPoly& p, const Rational& a, const Rational& b,
                              const Rational& c) {
    const int d = p.arity();
    RatPoly r(d);
    for (int i = 0; i < d; ++i) {
        const RatPoly second = partial(partial(p, i), i);
        if (!second.is_zero()) {
            RatPoly xi = RatPoly::variable(d, i);
            RatPoly quad = xi * xi + xi * a + RatPoly::constant(d, b);
            r += quad * second;
        }
        if (!(c == 0)) r += partial(p, i) * c;
    }
    return r;
}

/// e^{w.x} * p(x) with rational weight vector and polynomial body.
/// Zero iff the body is zero.
struct ExpPoly {
    std::vector<Rational> weight;
    RatPoly body;

    ExpPoly(std::vector<Rational> w, RatPoly b) : weight(std::move(w)), body(std::move(b)) {
        if (static_cast<int>(weight.size()) != body.arity())
            throw std::invalid_argument("ExpPoly: weight length != body arity");
    }

    int arity() const { return body.arity(); }
    bool is_zero() const { return body.is_zero(); }

    friend bool operator==(const ExpPoly&, const ExpPoly&) = default;
};

/// Laplacian in the exponential-weight algebra:
///   Delta(e^{w.x} p) = e^{w.x} (|w|^2 p + 2 w.grad p + Delta p).
/// The weight vector is preserved, so eigenfunction claims reduce to exact
/// polynomial comparisons of bodies.
inline ExpPoly exp_laplacian(const ExpPoly& h) {
    Rational w2(0);
    for (const auto& w : h.weight) w2 += w * w;
    RatPoly body = h.body * w2 + dir_derivative(h.body, h.weight) * Rational(2) +
                   laplacian(h.body);
    return ExpPoly(h.weight, std::move(body));
}

inline std::string to_string(const ExpPoly& h) {
    std::string w = "exp(";
    bool first = true;
    for (std::size_t i = 0; i < h.weight.size(); ++i) {
        if (h.weight[i] == 0) continue;
        std::string coeff = to_string(h.weight[i]);
        if (!first) w += coeff[0] == '-' ? "" : "+";
        first = false;
        if (h.weight[i] == 1) {
            w += "x" + std::to_string(i + 1);
        } else if (h.weight[i] == -1) {
            w += "-x" + std::to_string(i + 1);
        } else {
            w += coeff + "*x" + std::to_string(i + 1);
        }
    }
    if (first) w += "0";
    w += ")";
    return w + " * (" + to_string(h.body) + ")";
}

}  // namespace hzoo
