#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hzoo/monomial.hpp"
#include "hzoo/rational.hpp"

namespace hzoo {

/// Sparse multivariate polynomial with exact coefficients.
///
/// The coefficient field is the template parameter (Rational or
/// GaussRational), so mixing fields in one operation is a type error.
/// Arity is explicit, fixed data: variables are x1..xd by index. Canonical
/// form is maintained by every operation -- no zero coefficient is ever
/// stored, and structural equality coincides with mathematical equality.
template <typename F>
class Poly {
public:
    using TermMap = std::map<Monomial, F, GradedLexLess>;

    Poly() = default;
    explicit Poly(int arity) : arity_(check_arity(arity)) {}

    static Poly zero(int arity) { return Poly(arity); }

    static Poly constant(int arity, F value) {
        Poly p(arity);
        if (!detail::is_zero_coeff(value)) p.terms_.emplace(Monomial(arity), std::move(value));
        return p;
    }

    static Poly one(int arity) { return constant(arity, F(1)); }

    /// x_{index+1}; index is 0-based.
    static Poly variable(int arity, int index) {
        if (index < 0 || index >= arity)
            throw std::invalid_argument("Poly::variable: index out of range");
        Monomial m(arity);
        m.exps[static_cast<std::size_t>(index)] = 1;
        Poly p(arity);
        p.terms_.emplace(std::move(m), F(1));
        return p;
    }

    static Poly monomial(int arity, Monomial m, F coeff) {
        if (static_cast<int>(m.arity()) != arity)
            throw std::invalid_argument("Poly::monomial: exponent length != arity");
        Poly p(arity);
        if (!detail::is_zero_coeff(coeff)) p.terms_.emplace(std::move(m), std::move(coeff));
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const {
        return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.total_degree());
    }

    /// Largest term under graded lex. Requires a nonzero polynomial.
    const std::pair<const Monomial, F>& leading() const {
        if (terms_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
        return *terms_.rbegin();
    }

    /// Coefficient of the given monomial, zero if absent.
    F coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? F(0) : it->second;
    }

    /// Coefficient of x_{index+1}^power.
    F coefficient_of_power(int index, std::uint32_t power) const {
        Monomial m(arity_);
        m.exps.at(static_cast<std::size_t>(index)) = power;
        return coefficient(m);
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly operator-() const {
        Poly r(arity_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        require_same_shape(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        require_same_shape(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Poly& operator*=(const Poly& o) {
        require_same_shape(o);
        Poly r(arity_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                r.add_term(ma * mb, ca * cb);
            }
        }
        terms_ = std::move(r.terms_);
        return *this;
    }

    Poly& operator*=(const F& s) {
        if (detail::is_zero_coeff(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c = c * s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }

    /// Adds c * m, dropping the entry if the sum cancels.
    void add_term(const Monomial& m, F c) {
        if (detail::is_zero_coeff(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (detail::is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

private:
    static int check_arity(int arity) {
        if (arity < 0) throw std::invalid_argument("Poly: negative arity");
        return arity;
    }

    void require_same_shape(const Poly& o) const {
        if (arity_ != o.arity_)
            throw std::invalid_argument("Poly: arity mismatch between operands");
    }

    int arity_ = 0;
    TermMap terms_;
};

using RatPoly = Poly<Rational>;
using GaussPoly = Poly<GaussRational>;

/// p^n by binary exponentiation; p^0 == 1 for every p.
template <typename F>
Poly<F> pow(const Poly<F>& p, unsigned long n) {
    Poly<F> result = Poly<F>::one(p.arity());
    Poly<F> base = p;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

/// Formal partial derivative with respect to x_{index+1}.
template <typename F>
Poly<F> partial(const Poly<F>& p, int index) {
    if (index < 0 || index >= p.arity())
        throw std::invalid_argument("partial: variable index out of range");
    Poly<F> r(p.arity());
    const auto idx = static_cast<std::size_t>(index);
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = m.exps[idx];
        if (e == 0) continue;
        Monomial n = m;
        n.exps[idx] = e - 1;
        r.add_term(n, c * F(static_cast<int>(e)));
    }
    return r;
}

/// Simultaneous substitution x_{i+1} -> bindings.at(i). Every variable that
/// occurs in p must be bound; all replacement polynomials must share one
/// arity, which becomes the arity of the result. An empty binding map is
/// accepted only for polynomials with no occurring variables.
template <typename F>
Poly<F> substitute(const Poly<F>& p, const std::map<int, Poly<F>>& bindings) {
    int target_arity = p.arity();
    bool first = true;
    for (const auto& [i, q] : bindings) {
        if (i < 0 || i >= p.arity())
            throw std::invalid_argument("substitute: binding index out of range");
        if (first) {
            target_arity = q.arity();
            first = false;
        } else if (q.arity() != target_arity) {
            throw std::invalid_argument("substitute: replacement polynomials disagree on arity");
        }
    }

    // Power cache per bound variable; bindings are often reused many times.
    std::map<int, std::vector<Poly<F>>> powers;
    const auto power_of = [&](int var, std::uint32_t e) -> const Poly<F>& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Poly<F>::one(target_arity));
        while (cache.size() <= e) cache.push_back(cache.back() * bindings.at(var));
        return cache[e];
    };

    Poly<F> result(target_arity);
    for (const auto& [m, c] : p.terms()) {
        Poly<F> term = Poly<F>::constant(target_arity, c);
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            const std::uint32_t e = m.exps[i];
            if (e == 0) continue;
            const int vi = static_cast<int>(i);
            if (!bindings.contains(vi))
                throw std::invalid_argument("substitute: missing binding for occurring variable x" +
                                            std::to_string(i + 1));
            term *= power_of(vi, e);
        }
        result += term;
    }
    return result;
}

/// Exact evaluation at a point; a ring homomorphism into F.
template <typename F>
F eval_exact(const Poly<F>& p, const std::vector<F>& point) {
    if (static_cast<int>(point.size()) != p.arity())
        throw std::invalid_argument("eval_exact: point length != arity");
    std::vector<std::vector<F>> powers(point.size());
    const auto power_of = [&](std::size_t i, std::uint32_t e) -> const F& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(F(1));
        while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
        return cache[e];
    };
    F acc(0);
    for (const auto& [m, c] : p.terms()) {
        F t = c;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] != 0) t = t * power_of(i, m.exps[i]);
        acc += t;
    }
    return acc;
}

inline Rational eval_exact(const Poly<Rational>& p, const std::vector<long long>& point) {
    std::vector<Rational> q(point.begin(), point.end());
    return eval_exact(p, q);
}

/// Single-divisor long division under graded lex. Returns the quotient when
/// g divides f exactly, std::nullopt otherwise. Since a single polynomial is
/// a Groebner basis of the ideal it generates, a zero remainder is both
/// necessary and sufficient for divisibility.
template <typename F>
std::optional<Poly<F>> try_divide(const Poly<F>& f, const Poly<F>& g) {
    if (g.is_zero()) throw std::invalid_argument("try_divide: zero divisor");
    if (f.arity() != g.arity()) throw std::invalid_argument("try_divide: arity mismatch");

    Poly<F> rem = f;
    Poly<F> quot(f.arity());
    const auto& [gm, gc] = g.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!divides(gm, rm)) {
            // The leading term would land in the remainder and can never be
            // cancelled later, so f is not a multiple of g.
            return std::nullopt;
        }
        const Monomial t = rm / gm;
        const F c = rc / gc;
        quot.add_term(t, c);
        for (const auto& [m, cg] : g.terms()) rem.add_term(t * m, -(c * cg));
    }
    return quot;
}

/// Splits a Gaussian-rational polynomial into (real part, imaginary part),
/// both with rational coefficients: p == re + i*im.
inline std::pair<RatPoly, RatPoly> real_imag(const GaussPoly& p) {
    RatPoly re(p.arity());
    RatPoly im(p.arity());
    for (const auto& [m, c] : p.terms()) {
        if (c.re != 0) re.add_term(m, c.re);
        if (c.im != 0) im.add_term(m, c.im);
    }
    return {std::move(re), std::move(im)};
}

/// Embeds a rational-coefficient polynomial into the Gaussian rationals.
inline GaussPoly complexify(const RatPoly& p) {
    GaussPoly r(p.arity());
    for (const auto& [m, c] : p.terms()) r.add_term(m, GaussRational(c));
    return r;
}

namespace detail {

inline void append_monomial(std::string& out, const Monomial& m) {
    bool first = true;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!first) out += '*';
        first = false;
        out += 'x';
        out += std::to_string(i + 1);
        if (m.exps[i] > 1) {
            out += '^';
            out += std::to_string(m.exps[i]);
        }
    }
}

}  // namespace detail

/// Canonical text form: terms in descending graded-lex order, parseable by
/// the expression grammar. The zero polynomial prints as "0".
inline std::string to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        if (m.is_constant()) {
            out += to_string(a);
        } else {
            if (!(a == 1)) {
                out += to_string(a);
                out += '*';
            }
            detail::append_monomial(out, m);
        }
    }
    return out;
}

/// Display form for Gaussian-coefficient polynomials; not part of the
/// parseable grammar.
inline std::string to_string(const GaussPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!out.empty()) out += " + ";
        out += '(' + to_string(c) + ')';
        if (!m.is_constant()) {
            out += '*';
            detail::append_monomial(out, m);
        }
    }
    return out;
}

}  // namespace hzoo
