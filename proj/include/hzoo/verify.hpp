#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hzoo/constructions.hpp"
#include "hzoo/diffops.hpp"
#include "hzoo/geometry.hpp"
#include "hzoo/parallel.hpp"
#include "hzoo/poly.hpp"

namespace hzoo {

namespace detail {

/// FNV-1a over canonical input serializations; good enough for stable,
/// reproducible certificate digests (not a cryptographic commitment).
class Digest {
public:
    Digest& feed(std::string_view s) {
        for (unsigned char ch : s) {
            state_ ^= ch;
            state_ *= 1099511628211ULL;
        }
        // Separator byte so feed("ab", "c") != feed("a", "bc").
        state_ ^= 0xFFU;
        state_ *= 1099511628211ULL;
        return *this;
    }

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out = "fnv1a64:";
        for (int shift = 60; shift >= 0; shift -= 4)
            out += digits[(state_ >> shift) & 0xF];
        return out;
    }

private:
    std::uint64_t state_ = 14695981039346656037ULL;
};

}  // namespace detail

/// One verdict of a larger claim, e.g. a single face or family member.
struct Subcase {
    std::string id;
    bool passed;
    std::string detail;
};

/// Machine-checkable verdict record. The top-level verdict passes iff every
/// subcase passed; a witness (residual polynomial, offending face, ...) is
/// present whenever the verdict is fail.
struct Certificate {
    std::string claim_id;
    std::string inputs_digest;
    bool passed = false;
    std::optional<std::string> witness;
    std::vector<Subcase> subcases;
};

namespace detail {

inline Certificate assemble(std::string claim_id, std::string digest,
                            std::vector<Subcase> subcases,
                            std::optional<std::string> witness = std::nullopt) {
    Certificate cert;
    cert.claim_id = std::move(claim_id);
    cert.inputs_digest = std::move(digest);
    cert.subcases = std::move(subcases);
    cert.passed = std::all_of(cert.subcases.begin(), cert.subcases.end(),
                              [](const Subcase& s) { return s.passed; });
    if (!cert.passed && !witness) {
        for (const auto& s : cert.subcases) {
            if (!s.passed) {
                witness = s.id + (s.detail.empty() ? "" : ": " + s.detail);
                break;
            }
        }
    }
    if (!cert.passed) cert.witness = std::move(witness);
    return cert;
}

}  // namespace detail

/// Passes iff laplacian(p) is the zero polynomial; the witness on fail is
/// the nonzero residual.
inline Certificate check_harmonic(const RatPoly& p) {
    detail::Digest dg;
    dg.feed("harmonic").feed(std::to_string(p.arity())).feed(to_string(p));
    const RatPoly residual = laplacian(p);
    const bool ok = residual.is_zero();
    std::vector<Subcase> sub{{"laplacian-zero", ok, ok ? "" : to_string(residual)}};
    return detail::assemble("harmonic", dg.hex(), std::move(sub),
                            ok ? std::nullopt : std::make_optional(to_string(residual)));
}

/// Passes iff Delta(e^{w.x} p) == lambda * e^{w.x} p exactly, compared in
/// the exponential-weight algebra (same weight, bodies compared as
/// polynomials).
inline Certificate check_eigenfunction(const ExpPoly& h, const Rational& lambda) {
    detail::Digest dg;
    dg.feed("eigenfunction");
    for (const auto& w : h.weight) dg.feed(to_string(w));
    dg.feed(to_string(h.body)).feed(to_string(lambda));
    const RatPoly residual = exp_laplacian(h).body - h.body * lambda;
    const bool ok = residual.is_zero();
    std::vector<Subcase> sub{{"eigen-residual-zero", ok, ok ? "" : to_string(residual)}};
    return detail::assemble("eigenfunction(lambda=" + to_string(lambda) + ")", dg.hex(),
                            std::move(sub),
                            ok ? std::nullopt : std::make_optional(to_string(residual)));
}

/// Passes iff p restricts to the zero polynomial on every k-face of Q_d.
/// One subcase per face; face restrictions run in parallel and are
/// assembled in enumeration order.
inline Certificate check_skeleton_vanishing(const RatPoly& p, int d, int k) {
    if (p.arity() != d)
        throw std::invalid_argument("check_skeleton_vanishing: arity != d");
    detail::Digest dg;
    dg.feed("skeleton-vanishing").feed(std::to_string(d)).feed(std::to_string(k)).feed(
        to_string(p));
    const std::vector<Face> faces = enumerate_faces(d, k);
    std::vector<Subcase> sub(faces.size());
    detail::parallel_for(faces.size(), [&](std::size_t i) {
        const RatPoly r = restrict_to_face(p, faces[i]);
        sub[i] = {faces[i].id(), r.is_zero(), r.is_zero() ? "" : to_string(r)};
    });
    return detail::assemble(
        "skeleton-vanishing(d=" + std::to_string(d) + ",k=" + std::to_string(k) + ")", dg.hex(),
        std::move(sub));
}

/// Passes iff the divisor exactly divides every family member; each subcase
/// records the quotient degree.
inline Certificate check_divides_family(const RatPoly& divisor,
                                        const std::vector<RatPoly>& family) {
    if (divisor.is_zero()) throw std::invalid_argument("check_divides_family: zero divisor");
    detail::Digest dg;
    dg.feed("divides-family").feed(to_string(divisor));
    for (const auto& f : family) dg.feed(to_string(f));
    std::vector<Subcase> sub(family.size());
    detail::parallel_for(family.size(), [&](std::size_t i) {
        const auto q = try_divide(family[i], divisor);
        if (q) {
            sub[i] = {"member[" + std::to_string(i) + "]", true,
                      "quotient degree " + std::to_string(q->total_degree())};
        } else {
            sub[i] = {"member[" + std::to_string(i) + "]", false, "not divisible"};
        }
    });
    return detail::assemble("divides-family", dg.hex(), std::move(sub));
}

namespace detail {

/// Exact rank by fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing row denominators.
inline std::size_t exact_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer scale(1);
        for (const auto& q : m[i]) scale = lcm(scale, denominator(q));
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational v = m[i][j] * Rational(scale);
            a[i][j] = numerator(v);
        }
    }
    std::size_t rank = 0;
    Integer prev_pivot(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && a[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(a[rank], a[pivot_row]);
        const Integer pivot = a[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[rank][j]) / prev_pivot;
            }
            a[i][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Passes iff the coefficient vectors over the union of occurring monomials
/// have full rank (exact fraction-free elimination). Subcases record the
/// degree sequence.
inline Certificate check_linear_independence(const std::vector<RatPoly>& family) {
    if (family.empty())
        throw std::invalid_argument("check_linear_independence: empty family");
    const int arity = family.front().arity();
    for (const auto& p : family) {
        if (p.arity() != arity)
            throw std::invalid_argument("check_linear_independence: arity mismatch in family");
    }
    detail::Digest dg;
    dg.feed("linear-independence");
    for (const auto& p : family) dg.feed(to_string(p));

    std::map<Monomial, std::size_t, GradedLexLess> columns;
    for (const auto& p : family) {
        for (const auto& [m, c] : p.terms()) columns.try_emplace(m, 0);
    }
    std::size_t next = 0;
    for (auto& [m, idx] : columns) idx = next++;

    std::vector<std::vector<Rational>> matrix(
        family.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (const auto& [m, c] : family[i].terms()) matrix[i][columns.at(m)] = c;
    }
    const std::size_t rank = detail::exact_rank(std::move(matrix));
    const bool ok = rank == family.size();

    std::vector<Subcase> sub;
    sub.reserve(family.size() + 1);
    for (std::size_t i = 0; i < family.size(); ++i) {
        sub.push_back({"member[" + std::to_string(i) + "]", true,
                       "degree " + std::to_string(family[i].total_degree())});
    }
    sub.push_back({"full-rank", ok,
                   "rank " + std::to_string(rank) + " of " + std::to_string(family.size())});
    return detail::assemble("linear-independence", dg.hex(), std::move(sub));
}

/// Passes iff both components are harmonic and the two conformality
/// polynomials |grad phi1|^2 - |grad phi2|^2 and grad phi1 . grad phi2
/// vanish identically.
inline Certificate check_conformality(const MorphismPair& m) {
    detail::Digest dg;
    dg.feed("conformality").feed(to_string(m.phi1)).feed(to_string(m.phi2));
    const auto g1 = gradient(m.phi1);
    const auto g2 = gradient(m.phi2);
    RatPoly norm_diff(m.arity());
    RatPoly dot(m.arity());
    for (std::size_t i = 0; i < g1.size(); ++i) {
        norm_diff += g1[i] * g1[i] - g2[i] * g2[i];
        dot += g1[i] * g2[i];
    }
    const RatPoly lap1 = laplacian(m.phi1);
    const RatPoly lap2 = laplacian(m.phi2);
    std::vector<Subcase> sub{
        {"phi1-harmonic", lap1.is_zero(), lap1.is_zero() ? "" : to_string(lap1)},
        {"phi2-harmonic", lap2.is_zero(), lap2.is_zero() ? "" : to_string(lap2)},
        {"equal-gradient-norms", norm_diff.is_zero(),
         norm_diff.is_zero() ? "" : to_string(norm_diff)},
        {"orthogonal-gradients", dot.is_zero(), dot.is_zero() ? "" : to_string(dot)},
    };
    return detail::assemble("conformality", dg.hex(), std::move(sub));
}

/// Composes a 2-variable polynomial with the morphism (u -> phi1, v -> phi2)
/// and passes iff the pullback is harmonic.
inline Certificate check_composition(const RatPoly& p2, const MorphismPair& m) {
    if (p2.arity() != 2)
        throw std::invalid_argument("check_composition: outer polynomial must have arity 2");
    detail::Digest dg;
    dg.feed("composition").feed(to_string(p2)).feed(to_string(m.phi1)).feed(to_string(m.phi2));
    const RatPoly pullback = substitute(p2, std::map<int, RatPoly>{{0, m.phi1}, {1, m.phi2}});
    const RatPoly residual = laplacian(pullback);
    const bool ok = residual.is_zero();
    std::vector<Subcase> sub{{"pullback-harmonic", ok, ok ? "" : to_string(residual)}};
    return detail::assemble("composition", dg.hex(), std::move(sub),
                            ok ? std::nullopt : std::make_optional(to_string(residual)));
}

/// Independent cross-check of divisibility: every probe must lie on the
/// divisor's zero set (usage error otherwise), and the certificate passes
/// iff every family member vanishes at every probe.
inline Certificate common_zero_witness(const RatPoly& divisor,
                                       const std::vector<RatPoly>& family,
                                       const std::vector<std::vector<Rational>>& probes) {
    detail::Digest dg;
    dg.feed("common-zero-witness").feed(to_string(divisor));
    for (const auto& f : family) dg.feed(to_string(f));
    for (const auto& pt : probes) {
        for (const auto& c : pt) dg.feed(to_string(c));
        if (!(eval_exact(divisor, pt) == 0))
            throw std::invalid_argument("common_zero_witness: probe not on divisor zero set");
    }
    std::vector<Subcase> sub;
    sub.reserve(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool all_zero = true;
        std::string bad;
        for (const auto& pt : probes) {
            const Rational v = eval_exact(family[i], pt);
            if (!(v == 0)) {
                all_zero = false;
                bad = "value " + to_string(v);
                break;
            }
        }
        sub.push_back({"member[" + std::to_string(i) + "]", all_zero, bad});
    }
    return detail::assemble("common-zero-witness", dg.hex(), std::move(sub));
}

}  // namespace hzoo
