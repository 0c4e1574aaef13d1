#include "jchom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace jchom {

void QuadSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::invalid_argument("QuadSpec: tolerances must be > 0");
    if (!(window_factor > 0.0) || max_depth < 4)
        throw std::invalid_argument("QuadSpec: bad window or depth");
}

namespace {

// Recursive adaptive Simpson with Richardson acceptance. Kept deliberately
// plain and separate from the main Gauss-Kronrod engine.
template <class T>
struct SimpsonScratch {
    int depth_limit;
    double tol_floor;
    long evals = 0;
    double err = 0.0;
};

template <class T, class F>
T simpson_rec(F& f, double a, double m, double b, T fa, T fm, T fb, T whole, double tol,
              int depth, SimpsonScratch<T>& sc)
{
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const T flm = f(lm), frm = f(rm);
    sc.evals += 2;
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T refined = left + right;
    const double disc = std::abs(refined - whole);
    if (depth <= 0 || disc <= 15.0 * std::max(tol, sc.tol_floor)) {
        sc.err += disc / 15.0;
        return refined + (refined - whole) / 15.0;
    }
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, sc)
         + simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, sc);
}

template <class T, class F>
T simpson(F&& f, std::span<const double> pts, double tol, int depth, double* err_out)
{
    SimpsonScratch<T> sc;
    sc.depth_limit = depth;
    sc.tol_floor = 0.0;
    T total{};
    std::size_t segments = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] < pts[i + 1]) ++segments;
    if (segments == 0) throw std::invalid_argument("simpson: empty interval");
    const double seg_tol = tol / std::sqrt(double(segments));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i], b = pts[i + 1];
        if (!(a < b)) continue;
        const double m = 0.5 * (a + b);
        const T fa = f(a), fm = f(m), fb = f(b);
        sc.evals += 3;
        const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        total += simpson_rec(f, a, m, b, fa, fm, fb, whole, seg_tol, depth, sc);
    }
    if (err_out) *err_out = sc.err;
    return total;
}

// whole-line Simpson: windowed core plus both tails mapped onto [0, 1)
template <class T, class F>
T simpson_real_line(F&& f, std::span<const double> pts, double tol, int depth, double* err_out)
{
    double err = 0.0;
    T total = simpson<T>(f, pts, tol, depth, &err);
    const double lo = pts.front(), hi = pts.back();
    const double scale = std::max(hi - lo, 1e-12);
    const double t_cap = 1.0 - 1.0 / (1.0 + 1e7);
    const std::vector<double> tpts{0.0, 0.5, 0.9, t_cap};
    for (double side : {1.0, -1.0}) {
        const double edge = side > 0 ? hi : lo;
        auto mapped = [&](double t) {
            const double om = 1.0 - t;
            return f(edge + side * scale * t / om) * (scale / (om * om));
        };
        double terr = 0.0;
        total += simpson<T>(mapped, std::span<const double>(tpts), tol, depth, &terr);
        err += terr;
    }
    if (err_out) *err_out = err;
    return total;
}

struct OracleFrame {
    TwoPhotonInput in;
    JcParams par;
    double norm = 1.0;
    complex e1t[2];
    complex e2t[2];
    double t2_pref;
    double window;

    OracleFrame(const TwoPhotonInput& input, const JcParams& params, const QuadSpec& spec)
        : in(input), par(params)
    {
        spec.validate();
        par.validate();
        in.validate();
        if (in.ports == PortConfig::SameWaveguide1)
            norm = 1.0 / std::sqrt(1.0 + std::norm(packet_overlap(in.packet1, in.packet2)));
        e1t[0] = jc_energy_shifted(1, Branch::Upper, par);
        e1t[1] = jc_energy_shifted(1, Branch::Lower, par);
        e2t[0] = jc_energy_shifted(2, Branch::Upper, par);
        e2t[1] = jc_energy_shifted(2, Branch::Lower, par);
        t2_pref = par.kappa * par.kappa * std::pow(par.g, 4) / pi;
        window = spec.window_factor
               * std::max({par.kappa, in.packet1.xi, in.packet2.xi, par.g,
                           std::abs(par.delta())});
    }

    void set_box(const std::vector<double>& pts)
    {
        box_lo = pts.front();
        box_hi = pts.back();
    }

    bool in_box(double nu) const { return nu >= box_lo && nu <= box_hi; }

    // reduced T-matrix element with the ladder energies cached; verified
    // against scattering::t2_reduced in the unit tests
    complex t2(double nu1p, double nu1, double nu2) const
    {
        const double E = nu1 + nu2;
        const double nu2p = E - nu1p;
        const complex num = (E - e1t[0] - e1t[1]) * (E - 2.0 * e1t[0]) * (E - 2.0 * e1t[1]);
        complex den = (E - e2t[0]) * (E - e2t[1]);
        for (const complex& e : e1t) den *= (nu1p - e) * (nu2p - e) * (nu1 - e) * (nu2 - e);
        return t2_pref * num / den;
    }

    struct Feature {
        double center;
        double width;
    };

    std::vector<double> axis(std::initializer_list<Feature> features, double halfwidth) const
    {
        std::vector<double> pts;
        for (const Feature& f : features) {
            pts.push_back(f.center);
            for (double k : {1.0, 6.0}) {
                pts.push_back(f.center - k * f.width);
                pts.push_back(f.center + k * f.width);
            }
        }
        double lo = pts.front(), hi = pts.front();
        for (double x : pts) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        pts.push_back(lo - halfwidth);
        pts.push_back(hi + halfwidth);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    }

    double box_lo = 0.0, box_hi = 0.0;

    std::vector<double> frequency_axis(double shift = 0.0) const
    {
        return axis({{in.packet1.nu0 + shift, 0.5 * in.packet1.xi},
                     {in.packet2.nu0 + shift, 0.5 * in.packet2.xi},
                     {e1t[0].real() + shift, std::abs(e1t[0].imag())},
                     {e1t[1].real() + shift, std::abs(e1t[1].imag())}},
                    window);
    }

    complex lin(PortPair pair, double a, double b) const
    {
        const SingleAmps sa = single_amps(a, par);
        const SingleAmps sb = single_amps(b, par);
        const complex f1a = packet_amplitude(a, in.packet1);
        const complex f1b = packet_amplitude(b, in.packet1);
        const complex f2a = packet_amplitude(a, in.packet2);
        const complex f2b = packet_amplitude(b, in.packet2);
        if (in.ports == PortConfig::DifferentWaveguides) {
            switch (pair) {
            case PortPair::P12: return sa.r * sb.r * f1a * f2b + sa.t * sb.t * f1b * f2a;
            case PortPair::P11: return sa.r * sb.t * f1a * f2b + sa.t * sb.r * f1b * f2a;
            case PortPair::P22: return sa.t * sb.r * f1a * f2b + sa.r * sb.t * f1b * f2a;
            }
        }
        const complex sym = f1a * f2b + f1b * f2a;
        switch (pair) {
        case PortPair::P11: return norm * sa.r * sb.r * sym;
        case PortPair::P22: return norm * sa.t * sb.t * sym;
        case PortPair::P12: return norm * sa.r * sb.t * sym;
        }
        throw std::logic_error("oracle lin: bad pair");
    }

    complex corr(double a, double b, const QuadSpec& spec, double* err_out,
                 double tol = 1e-12) const
    {
        const double E = a + b;
        (void)spec;
        auto f = [&](double nu1) {
            return t2(a, nu1, E - nu1) * packet_amplitude(nu1, in.packet1)
                 * packet_amplitude(E - nu1, in.packet2);
        };
        std::vector<double> pts = axis({{in.packet1.nu0, 0.5 * in.packet1.xi},
                                        {E - in.packet2.nu0, 0.5 * in.packet2.xi},
                                        {e1t[0].real(), std::abs(e1t[0].imag())},
                                        {e1t[1].real(), std::abs(e1t[1].imag())},
                                        {E - e1t[0].real(), std::abs(e1t[0].imag())},
                                        {E - e1t[1].real(), std::abs(e1t[1].imag())}},
                                       window);
        double err = 0.0;
        const complex val = simpson<complex>(f, pts, tol, spec.max_depth, &err);
        if (err_out) *err_out = err;
        return ii * norm * val;
    }
};

} // namespace

complex quad_corr_term(double nu1p, double nu2p, const TwoPhotonInput& input,
                       const JcParams& params, const QuadSpec& spec, double* abs_err)
{
    OracleFrame frame(input, params, spec);
    double err = 0.0;
    const complex val = frame.corr(nu1p, nu2p, spec, &err);
    if (abs_err) *abs_err = err;
    if (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(val)))
        throw quad_failure("quad_corr_term: tolerance not met (nu1p=" + std::to_string(nu1p)
                               + ", nu2p=" + std::to_string(nu2p) + ")",
                           nu1p);
    return val;
}

double quad_gamma(const TwoPhotonInput& input, const JcParams& params, const QuadSpec& spec)
{
    if (input.ports != PortConfig::DifferentWaveguides)
        throw std::invalid_argument("quad_gamma: input must use different waveguides");
    OracleFrame frame(input, params, spec);
    QuadSpec fast = spec;
    const auto outer_pts = frame.frequency_axis();
    frame.set_box(outer_pts);
    const double c_tol = std::max(spec.abs_tol * 0.03, 1e-10);
    const double e0 = input.packet1.nu0 + input.packet2.nu0;
    const double ridge_w = 0.5 * (input.packet1.xi + input.packet2.xi);
    auto inner = [&](double nu1p) {
        auto f = [&](double nu2p) {
            complex amp = frame.lin(PortPair::P12, nu1p, nu2p);
            if (frame.in_box(nu1p) && frame.in_box(nu2p))
                amp += frame.corr(nu1p, nu2p, fast, nullptr, c_tol);
            return std::norm(amp);
        };
        // the total-energy ridge sits at nu2p = e0 - nu1p for every nu1p
        std::vector<double> pts = outer_pts;
        for (double k : {-6.0, -1.0, 0.0, 1.0, 6.0}) pts.push_back(e0 - nu1p + k * ridge_w);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return simpson_real_line<double>(f, pts, spec.abs_tol * 0.3, spec.max_depth, nullptr);
    };
    return simpson_real_line<double>(inner, outer_pts, spec.abs_tol, spec.max_depth, nullptr);
}

double quad_g2(PortPair pair, double tau, const TwoPhotonInput& input, const JcParams& params,
               const QuadSpec& spec)
{
    OracleFrame frame(input, params, spec);
    const double e0 = input.packet1.nu0 + input.packet2.nu0;
    const double kw = frame.par.kappa;
    const auto e_pts = frame.axis({{e0, frame.in.packet1.xi + frame.in.packet2.xi},
                                   {2.0 * frame.e1t[0].real(), 2.0 * std::abs(frame.e1t[0].imag())},
                                   {2.0 * frame.e1t[1].real(), 2.0 * std::abs(frame.e1t[1].imag())},
                                   {frame.e1t[0].real() + frame.e1t[1].real(), kw}},
                                  frame.window);
    // oscillation-aware split of the transform axis
    auto transform_pts = [&](double E) {
        std::vector<double> pts = frame.frequency_axis(-0.5 * E);
        if (std::abs(tau) > 1.0) {
            const double period = 2.0 * pi / std::abs(tau);
            const double lo = pts.front(), hi = pts.back();
            std::vector<double> dense;
            for (double x = lo; x < hi; x += 8.0 * period) dense.push_back(x);
            pts.insert(pts.end(), dense.begin(), dense.end());
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        }
        return pts;
    };
    frame.set_box(frame.frequency_axis());
    const double c_tol = std::max(spec.abs_tol * 0.03, 1e-9);
    auto outer = [&](double E) {
        auto f = [&](double x) {
            const double a = 0.5 * E + x, b = 0.5 * E - x;
            complex amp = frame.lin(pair, a, b);
            if (frame.in_box(a) && frame.in_box(b))
                amp += frame.corr(a, b, spec, nullptr, c_tol);
            return std::exp(complex(0.0, x * tau)) * amp;
        };
        const auto pts = transform_pts(E);
        return std::norm(simpson<complex>(f, pts, spec.abs_tol * 0.3, spec.max_depth, nullptr));
    };
    return simpson<double>(outer, e_pts, spec.abs_tol, spec.max_depth, nullptr) / (2.0 * pi);
}

} // namespace jchom
