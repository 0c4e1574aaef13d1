#pragma once

#include "jchom/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace jchom {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_panels = 8000;
};

template <class T>
struct QuadEstimate {
    T value{};
    double abs_err = 0.0;
    int panels = 0;
    bool converged = true;
    double worst_x = 0.0;      // midpoint of the worst panel when not converged
    std::vector<double> edges; // final panel boundaries, ascending
};

using QuadResult = QuadEstimate<double>;
using QuadResultC = QuadEstimate<complex>;

struct quad_failure : std::runtime_error {
    double where;
    explicit quad_failure(const std::string& msg, double x)
        : std::runtime_error(msg), where(x)
    {
    }
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double gk_node[8] = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993945,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126,
};
inline constexpr double gk_wk[8] = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.06309209262997855,
    0.02293532201052922,
};
inline constexpr double gk_wg[8] = {
    0.4179591836734694,
    0.0,
    0.3818300505051189,
    0.0,
    0.2797053914892767,
    0.0,
    0.1294849661688697,
    0.0,
};

inline double mag(double x) { return std::abs(x); }
inline double mag(const complex& x) { return std::abs(x); }

template <class T, class F>
void gk15(F& f, double a, double b, T& value, double& err)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T k15 = gk_wk[0] * fc;
    T g7 = gk_wg[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * gk_node[i];
        T fi = f(c + dx) + f(c - dx);
        k15 += gk_wk[i] * fi;
        if (gk_wg[i] != 0.0) g7 += gk_wg[i] * fi;
    }
    value = h * k15;
    err = mag(h * (k15 - g7));
}

template <class T>
struct Panel {
    double a, b;
    T value;
    double err;
};

// Global adaptive Gauss-Kronrod over a pre-split interval list. The split
// points let the caller seed every known narrow feature so none is skipped
// by the coarse first pass. Summation runs left to right over the final
// panel list, independent of the refinement order.
template <class T, class F>
QuadEstimate<T> adapt(F&& f, std::span<const double> pts, const QuadOptions& opt)
{
    QuadEstimate<T> out;
    if (pts.size() < 2) throw std::invalid_argument("quadrature: need at least two breakpoints");

    std::vector<Panel<T>> panels;
    panels.reserve(256);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i] < pts[i + 1])) continue; // tolerate duplicates
        Panel<T> p{pts[i], pts[i + 1], T{}, 0.0};
        gk15(f, p.a, p.b, p.value, p.err);
        panels.push_back(p);
    }
    if (panels.empty()) throw std::invalid_argument("quadrature: empty interval");

    auto tolerance_met = [&]() {
        T total{};
        double err = 0.0;
        for (const auto& p : panels) {
            total += p.value;
            err += p.err;
        }
        return err <= std::max(opt.abs_tol, opt.rel_tol * mag(total));
    };

    while (int(panels.size()) < opt.max_panels) {
        if (tolerance_met()) break;
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        Panel<T> p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) break; // interval exhausted
        Panel<T> left{p.a, mid, T{}, 0.0}, right{mid, p.b, T{}, 0.0};
        gk15(f, left.a, left.b, left.value, left.err);
        gk15(f, right.a, right.b, right.value, right.err);
        panels[worst] = left;
        panels.insert(panels.begin() + worst + 1, right);
    }

    std::sort(panels.begin(), panels.end(),
              [](const Panel<T>& x, const Panel<T>& y) { return x.a < y.a; });
    T total{};
    double err = 0.0;
    double worst_err = -1.0;
    out.edges.reserve(panels.size() + 1);
    out.edges.push_back(panels.front().a);
    for (const auto& p : panels) {
        total += p.value;
        err += p.err;
        out.edges.push_back(p.b);
        if (p.err > worst_err) {
            worst_err = p.err;
            out.worst_x = 0.5 * (p.a + p.b);
        }
    }
    out.value = total;
    out.abs_err = err;
    out.panels = int(panels.size());
    out.converged = err <= std::max(opt.abs_tol, opt.rel_tol * mag(total));
    return out;
}

} // namespace detail

template <class F>
QuadResult integrate(F&& f, std::span<const double> breakpoints, const QuadOptions& opt = {})
{
    return detail::adapt<double>(f, breakpoints, opt);
}

template <class F>
QuadResultC integrate_complex(F&& f, std::span<const double> breakpoints,
                              const QuadOptions& opt = {})
{
    return detail::adapt<complex>(f, breakpoints, opt);
}

/// Integral over the whole real line: adaptive on the windowed core plus the
/// two tails mapped onto finite intervals through x = edge +- S t/(1-t).
/// Suits integrands that decay at least like 1/x^2 outside the window (the
/// packet Lorentzian tails do, and their mass past any fixed window is not
/// negligible at the tolerances used here).
template <class F>
QuadResult integrate_real_line(F&& f, std::span<const double> breakpoints,
                               const QuadOptions& opt = {})
{
    QuadResult core = detail::adapt<double>(f, breakpoints, opt);
    const double lo = breakpoints.front();
    const double hi = breakpoints.back();
    const double scale = std::max(hi - lo, 1e-12);
    // cap the mapped range so pole separations stay resolvable in double
    const double t_cap = 1.0 - 1.0 / (1.0 + 1e7);
    const std::vector<double> tpts{0.0, 0.3, 0.7, 0.9, 0.99, t_cap};
    QuadOptions topt = opt;
    topt.max_panels = std::max(256, opt.max_panels / 8);
    auto right = [&](double t) {
        const double om = 1.0 - t;
        return f(hi + scale * t / om) * scale / (om * om);
    };
    auto left = [&](double t) {
        const double om = 1.0 - t;
        return f(lo - scale * t / om) * scale / (om * om);
    };
    const QuadResult r = detail::adapt<double>(right, std::span<const double>(tpts), topt);
    const QuadResult l = detail::adapt<double>(left, std::span<const double>(tpts), topt);
    core.value += r.value + l.value;
    core.abs_err += r.abs_err + l.abs_err;
    core.converged = core.converged && r.converged && l.converged;
    return core;
}

/// Sorted, deduplicated breakpoint list: [lo, hi] plus every interior point
/// that falls inside the window.
std::vector<double> make_breakpoints(double lo, double hi, std::span<const double> interior);

struct QuadNode {
    double x;
    double weight;
};

/// Frozen Gauss-Kronrod nodes covering the whole real line, with panels
/// refined against the supplied density (core window plus mapped tails).
/// Useful when many related integrals share one geometry, e.g. a correlation
/// trace evaluated over a grid of delays.
template <class F>
std::vector<QuadNode> real_line_nodes(F&& density, std::span<const double> breakpoints,
                                      const QuadOptions& opt)
{
    std::vector<QuadNode> nodes;
    auto emit_panels = [&nodes](const std::vector<double>& edges, auto&& map_x,
                                auto&& map_weight) {
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double c = 0.5 * (edges[i] + edges[i + 1]);
            const double h = 0.5 * (edges[i + 1] - edges[i]);
            nodes.push_back({map_x(c), h * detail::gk_wk[0] * map_weight(c)});
            for (int k = 1; k < 8; ++k) {
                for (double s : {1.0, -1.0}) {
                    const double t = c + s * h * detail::gk_node[k];
                    nodes.push_back({map_x(t), h * detail::gk_wk[k] * map_weight(t)});
                }
            }
        }
    };

    const QuadResult core = detail::adapt<double>(density, breakpoints, opt);
    emit_panels(core.edges, [](double x) { return x; }, [](double) { return 1.0; });

    const double lo = breakpoints.front();
    const double hi = breakpoints.back();
    const double scale = std::max(hi - lo, 1e-12);
    const double t_cap = 1.0 - 1.0 / (1.0 + 1e7);
    const std::vector<double> tpts{0.0, 0.3, 0.7, 0.9, 0.99, t_cap};
    QuadOptions topt = opt;
    topt.max_panels = std::max(256, opt.max_panels / 8);
    for (double side : {1.0, -1.0}) {
        const double edge = side > 0 ? hi : lo;
        auto map_x = [=](double t) { return edge + side * scale * t / (1.0 - t); };
        auto map_w = [=](double t) { return scale / ((1.0 - t) * (1.0 - t)); };
        auto mapped = [&](double t) { return density(map_x(t)) * map_w(t); };
        const QuadResult tail = detail::adapt<double>(mapped, std::span<const double>(tpts), topt);
        emit_panels(tail.edges, map_x, map_w);
    }
    return nodes;
}

} // namespace jchom
