#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace hzoo {

/// Exponent vector of a monomial. Length always equals the arity of the
/// owning polynomial; total degree is the sum of entries.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(int arity) : exps(static_cast<std::size_t>(arity), 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t arity() const { return exps.size(); }

    std::uint64_t total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    }

    bool is_constant() const {
        for (auto e : exps)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// m | n component-wise.
inline bool divides(const Monomial& m, const Monomial& n) {
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] > n.exps[i]) return false;
    return true;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

/// Component-wise quotient; requires divides(b, a).
inline Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= b.exps[i];
    return r;
}

/// Graded lexicographic order with x1 > x2 > ... > xd. This is the one
/// monomial order used everywhere: term storage, leading terms for
/// division, and printing.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.total_degree();
        const auto db = b.total_degree();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.exps.size(); ++i) {
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
        }
        return false;
    }
};

}  // namespace hzoo
