#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "hzoo/parallel.hpp"
#include "hzoo/poly.hpp"

namespace hzoo {

namespace detail {

/// Normalizes closures that return double or std::optional<double>;
/// non-finite values count as invalid samples.
template <typename Fn>
std::optional<double> invoke_field(const Fn& f, const std::vector<double>& x) {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn, const std::vector<double>&>,
                                 std::optional<double>>) {
        const std::optional<double> v = f(x);
        if (v && !std::isfinite(*v)) return std::nullopt;
        return v;
    } else {
        const double v = f(x);
        if (!std::isfinite(v)) return std::nullopt;
        return v;
    }
}

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

/// Compiled double-precision evaluator for an exact polynomial; the
/// independent numeric side of symbolic checks.
class PolyEvaluator {
public:
    explicit PolyEvaluator(const RatPoly& p) : arity_(p.arity()) {
        terms_.reserve(p.term_count());
        for (const auto& [m, c] : p.terms()) terms_.push_back({static_cast<double>(c), m.exps});
    }

    double operator()(const std::vector<double>& x) const {
        double acc = 0.0;
        for (const auto& t : terms_) {
            double v = t.coeff;
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                for (std::uint32_t e = 0; e < t.exps[i]; ++e) v *= x[i];
            }
            acc += v;
        }
        return acc;
    }

    int arity() const { return arity_; }

private:
    struct Term {
        double coeff;
        std::vector<std::uint32_t> exps;
    };
    int arity_;
    std::vector<Term> terms_;
};

inline PolyEvaluator make_double_evaluator(const RatPoly& p) { return PolyEvaluator(p); }

/// Five-point (2d+1 in dimension d) finite-difference Laplacian:
///   sum_i (f(x + h e_i) - 2 f(x) + f(x - h e_i)) / h^2,
/// exact on quadratics, O(h^2) error for C^4 functions. Returns nothing if
/// any stencil sample is invalid or non-finite.
template <typename Fn>
std::optional<double> fd_laplacian(const Fn& f, const std::vector<double>& x, double h) {
    if (h <= 0) throw std::invalid_argument("fd_laplacian: need h > 0");
    const std::optional<double> center = detail::invoke_field(f, x);
    if (!center) return std::nullopt;
    double acc = 0.0;
    std::vector<double> y = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = x[i] + h;
        const std::optional<double> plus = detail::invoke_field(f, y);
        y[i] = x[i] - h;
        const std::optional<double> minus = detail::invoke_field(f, y);
        y[i] = x[i];
        if (!plus || !minus) return std::nullopt;
        acc += (*plus - 2.0 * *center + *minus) / (h * h);
    }
    return acc;
}

/// Parameterized planar boundary curve, t in [0, 1].
struct BoundarySegment {
    std::string id;
    std::function<std::array<double, 2>(double)> at;
};

struct BoundaryReport {
    double max_abs = 0.0;
    int valid_samples = 0;
    int skipped_samples = 0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Samples each segment at n evenly spaced parameters and reports the
/// maximum |f| over valid samples. Invalid-domain samples are skipped and
/// counted, never treated as zeros.
template <typename Fn>
BoundaryReport boundary_scan(const Fn& f, const std::vector<BoundarySegment>& segments, int n,
                             double tol) {
    if (n < 2) throw std::invalid_argument("boundary_scan: need n >= 2");
    BoundaryReport report;
    report.tolerance = tol;
    for (const auto& seg : segments) {
        for (int i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / (n - 1);
            const std::array<double, 2> p = seg.at(t);
            const std::optional<double> v = detail::invoke_field(f, {p[0], p[1]});
            if (!v) {
                ++report.skipped_samples;
                continue;
            }
            ++report.valid_samples;
            report.max_abs = std::max(report.max_abs, std::abs(*v));
        }
    }
    report.passed = report.max_abs <= tol;
    return report;
}

/// Axis-aligned sampling box with a uniform per-axis resolution and the
/// stencil step used by derivative checks.
struct GridSpec {
    std::vector<double> lo;
    std::vector<double> hi;
    int resolution = 2;
    double h = 1e-3;

    void validate() const {
        if (lo.size() != hi.size() || lo.empty())
            throw std::invalid_argument("GridSpec: lo/hi must be nonempty and equal length");
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (!(lo[i] < hi[i])) throw std::invalid_argument("GridSpec: need lo < hi");
        }
        if (resolution < 2) throw std::invalid_argument("GridSpec: need resolution >= 2");
        if (h <= 0) throw std::invalid_argument("GridSpec: need h > 0");
    }

    int dimension() const { return static_cast<int>(lo.size()); }

    double coordinate(std::size_t axis, int index) const {
        return lo[axis] + (hi[axis] - lo[axis]) * index / (resolution - 1);
    }
};

/// A point of the sampled zero set together with the grid edge (or node)
/// that produced it, so the sign-change evidence can be re-checked.
struct NodalPoint {
    std::vector<double> x;
    std::vector<double> endpoint_a;
    std::vector<double> endpoint_b;
    bool from_node = false;  // exact zero at a grid node rather than an edge crossing
};

struct NodalCloud {
    int dimension = 0;
    std::string function_id;
    GridSpec grid;
    std::vector<NodalPoint> points;
    std::size_t invalid_nodes = 0;
    std::size_t skipped_edges = 0;
};

/// Scans all axis-aligned grid edges and emits midpoints of sign-changing
/// edges, in lexicographic grid order. Sign convention: an exact zero at a
/// node counts as positive for edge signs, and the node itself is emitted
/// as a nodal point. Edges touching invalid samples are skipped and counted.
template <typename Fn>
NodalCloud nodal_sample(const Fn& f, const GridSpec& grid, std::string function_id = {}) {
    grid.validate();
    const int d = grid.dimension();
    if (d > 4) throw std::invalid_argument("nodal_sample: dimension capped at 4");
    const int res = grid.resolution;

    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(res);

    const auto coords_of = [&](std::size_t flat) {
        std::vector<double> x(static_cast<std::size_t>(d));
        for (int axis = d - 1; axis >= 0; --axis) {
            x[static_cast<std::size_t>(axis)] =
                grid.coordinate(static_cast<std::size_t>(axis), static_cast<int>(flat % res));
            flat /= static_cast<std::size_t>(res);
        }
        return x;
    };

    // Evaluate every node once (parallel, slot-addressed); NaN marks invalid.
    std::vector<double> values(total);
    detail::parallel_for(total, [&](std::size_t i) {
        const std::optional<double> v = detail::invoke_field(f, coords_of(i));
        values[i] = v ? *v : std::numeric_limits<double>::quiet_NaN();
    });

    NodalCloud cloud;
    cloud.dimension = d;
    cloud.function_id = std::move(function_id);
    cloud.grid = grid;

    std::size_t stride = 1;
    std::vector<std::size_t> strides(static_cast<std::size_t>(d));
    for (int axis = d - 1; axis >= 0; --axis) {
        strides[static_cast<std::size_t>(axis)] = stride;
        stride *= static_cast<std::size_t>(res);
    }

    const auto positive = [](double v) { return v >= 0.0; };
    for (std::size_t i = 0; i < total; ++i) {
        const double vi = values[i];
        if (std::isnan(vi)) {
            ++cloud.invalid_nodes;
            for (int axis = 0; axis < d; ++axis) {
                const std::size_t s = strides[static_cast<std::size_t>(axis)];
                const int idx = static_cast<int>((i / s) % static_cast<std::size_t>(res));
                if (idx + 1 < res) ++cloud.skipped_edges;
            }
            continue;
        }
        const std::vector<double> xi = coords_of(i);
        if (vi == 0.0) cloud.points.push_back({xi, xi, xi, true});
        for (int axis = 0; axis < d; ++axis) {
            const std::size_t s = strides[static_cast<std::size_t>(axis)];
            const int idx = static_cast<int>((i / s) % static_cast<std::size_t>(res));
            if (idx + 1 >= res) continue;
            const double vj = values[i + s];
            if (std::isnan(vj)) {
                ++cloud.skipped_edges;
                continue;
            }
            if (positive(vi) == positive(vj)) continue;
            std::vector<double> xj = xi;
            xj[static_cast<std::size_t>(axis)] =
                grid.coordinate(static_cast<std::size_t>(axis), idx + 1);
            std::vector<double> mid = xi;
            mid[static_cast<std::size_t>(axis)] =
                0.5 * (xi[static_cast<std::size_t>(axis)] + xj[static_cast<std::size_t>(axis)]);
            cloud.points.push_back({std::move(mid), xi, std::move(xj), false});
        }
    }
    return cloud;
}

/// CSV export: header x1,...,xd then one point per row, full double
/// precision, '.' decimal separator, LF line endings.
inline void write_csv(const NodalCloud& cloud, std::ostream& os) {
    for (int i = 0; i < cloud.dimension; ++i) os << (i ? "," : "") << "x" << (i + 1);
    os << '\n';
    for (const auto& p : cloud.points) {
        for (int i = 0; i < cloud.dimension; ++i) {
            if (i) os << ',';
            os << detail::format_double(p.x[static_cast<std::size_t>(i)]);
        }
        os << '\n';
    }
}

}  // namespace hzoo
