#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hzoo/poly.hpp"
#include "hzoo/rational.hpp"

namespace hzoo {

/// A k-face of the unit cube Q_d = [-1/2, 1/2]^d: d-k coordinates pinned to
/// +-1/2, the rest free. Faces are closed, so faces of different patterns
/// may overlap; enumeration is by fixed-coordinate pattern.
struct Face {
    int dim;
    std::map<int, Rational> fixed;

    Face(int d, std::map<int, Rational> fx) : dim(d), fixed(std::move(fx)) {
        const Rational half(1, 2);
        for (const auto& [i, v] : fixed) {
            if (i < 0 || i >= dim) throw std::invalid_argument("Face: fixed index out of range");
            if (!(v == half || v == -half))
                throw std::invalid_argument("Face: fixed values must be +-1/2");
        }
    }

    int face_dim() const { return dim - static_cast<int>(fixed.size()); }

    std::vector<int> free_indices() const {
        std::vector<int> free;
        free.reserve(static_cast<std::size_t>(face_dim()));
        for (int i = 0; i < dim; ++i)
            if (!fixed.contains(i)) free.push_back(i);
        return free;
    }

    /// Stable identifier like "face{x1=1/2,x3=-1/2}".
    std::string id() const {
        std::string s = "face{";
        bool first = true;
        for (const auto& [i, v] : fixed) {
            if (!first) s += ',';
            first = false;
            s += "x" + std::to_string(i + 1) + "=" + to_string(v);
        }
        return s + "}";
    }

    friend bool operator==(const Face&, const Face&) = default;
};

/// All k-faces of Q_d: C(d, k) * 2^{d-k} of them, enumerated deterministically
/// (fixed index sets in lexicographic order, then sign patterns in binary
/// counting order with bit j set meaning +1/2 on the j-th fixed index).
inline std::vector<Face> enumerate_faces(int d, int k) {
    if (d < 1) throw std::invalid_argument("enumerate_faces: need d >= 1");
    if (k < 0 || k > d) throw std::invalid_argument("enumerate_faces: need 0 <= k <= d");
    const int fixed_count = d - k;
    const Rational half(1, 2);

    std::vector<std::vector<int>> index_sets;
    std::vector<int> current;
    const std::function<void(int)> choose = [&](int start) {
        if (static_cast<int>(current.size()) == fixed_count) {
            index_sets.push_back(current);
            return;
        }
        for (int i = start; i < d; ++i) {
            current.push_back(i);
            choose(i + 1);
            current.pop_back();
        }
    };
    choose(0);

    std::vector<Face> faces;
    faces.reserve(index_sets.size() << fixed_count);
    for (const auto& idx : index_sets) {
        for (unsigned mask = 0; mask < (1U << fixed_count); ++mask) {
            std::map<int, Rational> fx;
            for (int j = 0; j < fixed_count; ++j) {
                fx.emplace(idx[static_cast<std::size_t>(j)],
                           (mask >> j) & 1U ? half : -half);
            }
            faces.emplace_back(d, std::move(fx));
        }
    }
    return faces;
}

/// Substitutes the face's pinned coordinates and renumbers the free ones, so
/// the result lives in arity |free| (free indices in ascending order).
inline RatPoly restrict_to_face(const RatPoly& p, const Face& f) {
    if (p.arity() != f.dim)
        throw std::invalid_argument("restrict_to_face: polynomial arity != face dimension");
    const std::vector<int> free = f.free_indices();
    const int target = static_cast<int>(free.size());
    std::map<int, RatPoly> bindings;
    for (const auto& [i, v] : f.fixed) bindings.emplace(i, RatPoly::constant(target, v));
    for (int r = 0; r < target; ++r)
        bindings.emplace(free[static_cast<std::size_t>(r)], RatPoly::variable(target, r));
    return substitute(p, bindings);
}

/// n points on the face, free coordinates moving together through evenly
/// spaced rationals in [-1/2, 1/2] (n = 1 gives the centroid). Vertices have
/// no free coordinates and yield the single vertex.
inline std::vector<std::vector<Rational>> sample_face(const Face& f, int n) {
    if (n < 1) throw std::invalid_argument("sample_face: need n >= 1");
    const std::vector<int> free = f.free_indices();
    const auto make_point = [&](const Rational& t) {
        std::vector<Rational> x(static_cast<std::size_t>(f.dim), Rational(0));
        for (const auto& [i, v] : f.fixed) x[static_cast<std::size_t>(i)] = v;
        for (int i : free) x[static_cast<std::size_t>(i)] = t;
        return x;
    };
    std::vector<std::vector<Rational>> points;
    if (free.empty() || n == 1) {
        points.push_back(make_point(Rational(0)));
        return points;
    }
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        points.push_back(make_point(make_rational(2 * i - (n - 1), 2 * (n - 1))));
    }
    return points;
}

}  // namespace hzoo
