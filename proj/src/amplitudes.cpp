#include "jchom/amplitudes.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace jchom {

namespace {

// A rational factor in its own frequency variable u:
//   coef * e^{i u t_phase} * prod_j (u - roots[j]) / prod_k (u - poles[k]).
struct Factor {
    complex coef{1.0, 0.0};
    std::vector<complex> roots;
    std::vector<complex> poles;
    double t_phase = 0.0;
};

// Placement of a factor onto the integration variable x through u = offset + dir*x.
struct Placed {
    const Factor* factor;
    double offset;
    double dir;
};

// Multiply placed factors into one phase-tagged partial-fraction group.
// dir = -1 reverses the variable, which flips the sign of every linear
// factor and the sign of the packet phase.
PolePart assemble(complex coef, double phase, std::span<const Placed> placed)
{
    std::vector<complex> roots, poles;
    for (const Placed& pl : placed) {
        const Factor& f = *pl.factor;
        coef *= f.coef;
        if (f.t_phase != 0.0) {
            coef *= std::exp(complex(0.0, pl.offset * f.t_phase));
            phase += pl.dir * f.t_phase;
        }
        for (const complex& r : f.roots) {
            if (pl.dir > 0.0) {
                roots.push_back(r - pl.offset);
            } else {
                roots.push_back(pl.offset - r);
                coef = -coef;
            }
        }
        for (const complex& q : f.poles) {
            if (pl.dir > 0.0) {
                poles.push_back(q - pl.offset);
            } else {
                poles.push_back(pl.offset - q);
                coef = -coef;
            }
        }
    }
    return pole_part(coef, phase, roots, poles);
}

struct FactorTable {
    Factor refl;    // r(u)
    Factor trans;   // t(u)
    Factor packet1; // f1(u)
    Factor packet2; // f2(u)
    Factor respoles; // 1 / (u - eps~_{1+})(u - eps~_{1-})
};

FactorTable build_factors(const TwoPhotonInput& in, const JcParams& par, const complex* e1t,
                          const double* e1)
{
    FactorTable t;
    t.refl.roots = {complex(e1[0]), complex(e1[1])};
    t.refl.poles = {e1t[0], e1t[1]};
    t.trans.coef = complex(0.0, -par.kappa);
    t.trans.roots = {complex(par.omega_q)};
    t.trans.poles = {e1t[0], e1t[1]};
    t.packet1.coef = std::sqrt(in.packet1.xi / (2.0 * pi));
    t.packet1.poles = {complex(in.packet1.nu0, -0.5 * in.packet1.xi)};
    t.packet1.t_phase = in.packet1.t_arr;
    t.packet2.coef = std::sqrt(in.packet2.xi / (2.0 * pi));
    t.packet2.poles = {complex(in.packet2.nu0, -0.5 * in.packet2.xi)};
    t.packet2.t_phase = in.packet2.t_arr;
    t.respoles.poles = {e1t[0], e1t[1]};
    return t;
}

// Which single-photon amplitude multiplies each outgoing frequency, for the
// two exchange terms (packet1 at the first slot, then swapped).
struct LinTable {
    const Factor* first_a;
    const Factor* first_b;
    const Factor* second_a;
    const Factor* second_b;
};

LinTable lin_table(const FactorTable& t, PortPair pair, PortConfig ports)
{
    if (ports == PortConfig::DifferentWaveguides) {
        switch (pair) {
        case PortPair::P12: return {&t.refl, &t.refl, &t.trans, &t.trans};
        case PortPair::P11: return {&t.refl, &t.trans, &t.trans, &t.refl};
        case PortPair::P22: return {&t.trans, &t.refl, &t.refl, &t.trans};
        }
    } else {
        // both photons enter line 1: line-1 output is reflected, line-2 transmitted
        switch (pair) {
        case PortPair::P11: return {&t.refl, &t.refl, &t.refl, &t.refl};
        case PortPair::P22: return {&t.trans, &t.trans, &t.trans, &t.trans};
        case PortPair::P12: return {&t.refl, &t.trans, &t.refl, &t.trans};
        }
    }
    throw std::logic_error("lin_table: bad pair");
}

void append_feature(std::vector<double>& pts, double center, double width)
{
    for (double k : {-10.0, -3.0, -1.0, 0.0, 1.0, 3.0, 10.0})
        pts.push_back(center + k * width);
}

} // namespace

TwoPhotonAmplitude::TwoPhotonAmplitude(const TwoPhotonInput& input, const JcParams& params)
    : in_(input), par_(params)
{
    par_.validate();
    in_.validate();
    e1t_[0] = jc_energy_shifted(1, Branch::Upper, par_);
    e1t_[1] = jc_energy_shifted(1, Branch::Lower, par_);
    e2t_[0] = jc_energy_shifted(2, Branch::Upper, par_);
    e2t_[1] = jc_energy_shifted(2, Branch::Lower, par_);
    e1_[0] = jc_energy(1, Branch::Upper, par_);
    e1_[1] = jc_energy(1, Branch::Lower, par_);
    if (in_.ports == PortConfig::SameWaveguide1)
        norm_ = 1.0 / std::sqrt(1.0 + std::norm(packet_overlap(in_.packet1, in_.packet2)));

    // Pole collisions are parameter-level (never specific to one E), so a
    // single probe decides whether the residue route is usable.
    try {
        const double probe = energy_center() + 0.37 * std::max(par_.kappa, in_.packet1.xi);
        (void)corr_kernel_residue(probe);
        (void)anti_diagonal(PortPair::P12, probe);
    } catch (const degenerate_pole_error&) {
        residue_ok_ = false;
    }
}

complex TwoPhotonAmplitude::lin(PortPair pair, double a, double b) const
{
    const complex r_a = reflection_amp(a, par_);
    const complex r_b = reflection_amp(b, par_);
    const complex t_a = transmission_amp(a, par_);
    const complex t_b = transmission_amp(b, par_);
    const complex f1a = packet_amplitude(a, in_.packet1);
    const complex f1b = packet_amplitude(b, in_.packet1);
    const complex f2a = packet_amplitude(a, in_.packet2);
    const complex f2b = packet_amplitude(b, in_.packet2);

    if (in_.ports == PortConfig::DifferentWaveguides) {
        switch (pair) {
        case PortPair::P12: return r_a * r_b * f1a * f2b + t_a * t_b * f1b * f2a;
        case PortPair::P11: return r_a * t_b * f1a * f2b + t_a * r_b * f1b * f2a;
        case PortPair::P22: return t_a * r_b * f1a * f2b + r_a * t_b * f1b * f2a;
        }
    } else {
        const complex sym = f1a * f2b + f1b * f2a;
        switch (pair) {
        case PortPair::P11: return norm_ * r_a * r_b * sym;
        case PortPair::P22: return norm_ * t_a * t_b * sym;
        case PortPair::P12: return norm_ * r_a * t_b * sym;
        }
    }
    throw std::logic_error("lin: bad pair");
}

complex TwoPhotonAmplitude::corr_kernel_residue(double E) const
{
    const FactorTable t = build_factors(in_, par_, e1t_, e1_);
    const std::array<Placed, 4> placed{{{&t.packet1, 0.0, +1.0},
                                        {&t.respoles, 0.0, +1.0},
                                        {&t.packet2, E, -1.0},
                                        {&t.respoles, E, -1.0}}};
    PoleForm form;
    form.parts.push_back(assemble(1.0, 0.0, placed));
    const complex inner = form.fourier(0.0); // contour closed per sign of the delay

    const double pref = par_.kappa * par_.kappa * std::pow(par_.g, 4) / pi;
    const complex nfac = (E - e1t_[0] - e1t_[1]) * (E - 2.0 * e1t_[0]) * (E - 2.0 * e1t_[1])
                       / ((E - e2t_[0]) * (E - e2t_[1]));
    return ii * pref * nfac * inner;
}

complex TwoPhotonAmplitude::corr_kernel_quad(double E) const
{
    const double pref = par_.kappa * par_.kappa * std::pow(par_.g, 4) / pi;
    const complex nfac = (E - e1t_[0] - e1t_[1]) * (E - 2.0 * e1t_[0]) * (E - 2.0 * e1t_[1])
                       / ((E - e2t_[0]) * (E - e2t_[1]));
    auto integrand = [&](double nu1) {
        const double nu2 = E - nu1;
        complex den = 1.0;
        for (const complex& e : e1t_) den *= (nu1 - e) * (nu2 - e);
        return packet_amplitude(nu1, in_.packet1) * packet_amplitude(nu2, in_.packet2) / den;
    };
    const auto pts = corr_breakpoints(E);
    QuadOptions opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-10;
    const auto res = integrate_complex(integrand, pts, opt);
    // rational tail bound, integrand decays at least like 1/nu^2 past the window
    const double w_lo = pts.front(), w_hi = pts.back();
    const double tail = std::abs(integrand(w_lo)) * (energy_window())
                      + std::abs(integrand(w_hi)) * (energy_window());
    if (!res.converged)
        throw quad_failure("correlation integral did not converge (E=" + std::to_string(E)
                               + ", nu1=" + std::to_string(res.worst_x) + ")",
                           res.worst_x);
    (void)tail;
    return ii * pref * nfac * res.value;
}

complex TwoPhotonAmplitude::corr_kernel(double E, CorrMethod method) const
{
    if (method == CorrMethod::Residue && residue_ok_) return corr_kernel_residue(E);
    return corr_kernel_quad(E);
}

complex TwoPhotonAmplitude::corr(double a, double b, CorrMethod method) const
{
    complex dout = 1.0;
    for (const complex& e : e1t_) dout *= (a - e) * (b - e);
    return norm_ * corr_kernel(a + b, method) / dout;
}

complex TwoPhotonAmplitude::amp(PortPair pair, double a, double b, CorrMethod method) const
{
    return lin(pair, a, b) + corr(a, b, method);
}

PoleForm TwoPhotonAmplitude::anti_diagonal(PortPair pair, double E, bool with_lin,
                                           bool with_corr) const
{
    const FactorTable t = build_factors(in_, par_, e1t_, e1_);
    const double h = 0.5 * E;
    PoleForm form;
    if (with_lin) {
        const LinTable lt = lin_table(t, pair, in_.ports);
        const double n = (in_.ports == PortConfig::SameWaveguide1) ? norm_ : 1.0;
        const std::array<Placed, 4> first{{{lt.first_a, h, +1.0},
                                           {lt.first_b, h, -1.0},
                                           {&t.packet1, h, +1.0},
                                           {&t.packet2, h, -1.0}}};
        form.parts.push_back(assemble(n, 0.0, first));
        const std::array<Placed, 4> second{{{lt.second_a, h, +1.0},
                                            {lt.second_b, h, -1.0},
                                            {&t.packet1, h, -1.0},
                                            {&t.packet2, h, +1.0}}};
        form.parts.push_back(assemble(n, 0.0, second));
    }
    if (with_corr) {
        const complex kernel = norm_ * corr_kernel(E, CorrMethod::Residue);
        const std::array<Placed, 2> placed{{{&t.respoles, h, +1.0}, {&t.respoles, h, -1.0}}};
        form.parts.push_back(assemble(kernel, 0.0, placed));
    }
    return form;
}

double TwoPhotonAmplitude::energy_center() const
{
    return in_.packet1.nu0 + in_.packet2.nu0;
}

double TwoPhotonAmplitude::energy_window() const
{
    const double scale = std::max({par_.kappa, in_.packet1.xi, in_.packet2.xi, par_.g,
                                   std::abs(par_.delta())});
    double spread = 0.0;
    const double e0 = energy_center();
    for (const complex& e : e1t_) spread = std::max(spread, std::abs(2.0 * e.real() - e0));
    for (const complex& e : e2t_) spread = std::max(spread, std::abs(e.real() - e0));
    return 50.0 * scale + 2.0 * spread;
}

std::vector<double> TwoPhotonAmplitude::energy_breakpoints() const
{
    const double e0 = energy_center();
    const double w = energy_window();
    std::vector<double> pts;
    append_feature(pts, e0, in_.packet1.xi + in_.packet2.xi);
    for (const complex& e : e1t_) append_feature(pts, 2.0 * e.real(), 2.0 * std::abs(e.imag()));
    append_feature(pts, e1t_[0].real() + e1t_[1].real(),
                   std::abs(e1t_[0].imag()) + std::abs(e1t_[1].imag()));
    for (const complex& e : e2t_) append_feature(pts, e.real(), std::abs(e.imag()));
    for (double om : beam_splitter_energies(par_).all())
        append_feature(pts, 2.0 * om, par_.kappa);
    for (const complex& e : e1t_) {
        append_feature(pts, in_.packet1.nu0 + e.real(),
                       0.5 * in_.packet1.xi + std::abs(e.imag()));
        append_feature(pts, in_.packet2.nu0 + e.real(),
                       0.5 * in_.packet2.xi + std::abs(e.imag()));
    }
    return make_breakpoints(e0 - w, e0 + w, pts);
}

std::vector<double> TwoPhotonAmplitude::delta_breakpoints(double E) const
{
    const double h = 0.5 * E;
    std::vector<double> pts;
    for (const complex& e : e1t_) {
        append_feature(pts, e.real() - h, std::abs(e.imag()));
        append_feature(pts, h - e.real(), std::abs(e.imag()));
    }
    for (const LorentzianPacket* p : {&in_.packet1, &in_.packet2}) {
        append_feature(pts, p->nu0 - h, 0.5 * p->xi);
        append_feature(pts, h - p->nu0, 0.5 * p->xi);
    }
    double spread = 0.0;
    for (double x : pts) spread = std::max(spread, std::abs(x));
    const double w = 50.0 * std::max({par_.kappa, in_.packet1.xi, in_.packet2.xi, par_.g,
                                      std::abs(par_.delta())})
                   + 2.0 * spread;
    return make_breakpoints(-w, w, pts);
}

std::vector<double> TwoPhotonAmplitude::corr_breakpoints(double E) const
{
    std::vector<double> pts;
    append_feature(pts, in_.packet1.nu0, 0.5 * in_.packet1.xi);
    append_feature(pts, E - in_.packet2.nu0, 0.5 * in_.packet2.xi);
    for (const complex& e : e1t_) {
        append_feature(pts, e.real(), std::abs(e.imag()));
        append_feature(pts, E - e.real(), std::abs(e.imag()));
    }
    double lo = pts.front(), hi = pts.front();
    for (double x : pts) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    const double w = 50.0 * std::max({par_.kappa, in_.packet1.xi, in_.packet2.xi, par_.g,
                                      std::abs(par_.delta())});
    return make_breakpoints(lo - w, hi + w, pts);
}

complex out_amplitude_lin(PortPair pair, double nu1p, double nu2p, const TwoPhotonInput& input,
                          const JcParams& params)
{
    if (input.ports != PortConfig::DifferentWaveguides)
        throw std::invalid_argument("out_amplitude_lin: input must use different waveguides");
    return TwoPhotonAmplitude(input, params).lin(pair, nu1p, nu2p);
}

complex out_corr_term(double nu1p, double nu2p, const TwoPhotonInput& input,
                      const JcParams& params, CorrMethod method)
{
    return TwoPhotonAmplitude(input, params).corr(nu1p, nu2p, method);
}

OutAmplitude out_amplitude_full(PortPair pair, double nu1p, double nu2p,
                                const TwoPhotonInput& input, const JcParams& params,
                                CorrMethod method)
{
    if (input.ports != PortConfig::DifferentWaveguides)
        throw std::invalid_argument("out_amplitude_full: input must use different waveguides");
    TwoPhotonAmplitude ctx(input, params);
    return {pair, ctx.lin(pair, nu1p, nu2p), ctx.corr(nu1p, nu2p, method)};
}

OutAmplitude same_side_amplitudes(PortPair pair, double nu1p, double nu2p,
                                  const TwoPhotonInput& input, const JcParams& params,
                                  CorrMethod method)
{
    if (input.ports != PortConfig::SameWaveguide1)
        throw std::invalid_argument("same_side_amplitudes: input must use waveguide 1");
    TwoPhotonAmplitude ctx(input, params);
    return {pair, ctx.lin(pair, nu1p, nu2p), ctx.corr(nu1p, nu2p, method)};
}

double integral_abs2(const TwoPhotonAmplitude& ctx, PortPair pair, bool with_lin,
                     bool with_corr, CorrMethod method, const QuadOptions& opt,
                     double* err_out)
{
    const bool residue = (method == CorrMethod::Residue) && ctx.residue_usable();
    const auto e_pts = ctx.energy_breakpoints();
    QuadResult res;
    if (residue) {
        res = integrate_real_line(
            [&](double E) {
                return ctx.anti_diagonal(pair, E, with_lin, with_corr).abs2_integral();
            },
            e_pts, opt);
    } else {
        QuadOptions inner = opt;
        inner.abs_tol = std::max(opt.abs_tol * 0.1, 1e-13);
        res = integrate_real_line(
            [&](double E) {
                const auto x_pts = ctx.delta_breakpoints(E);
                const complex kernel = with_corr
                                           ? ctx.input_norm() * ctx.corr_kernel(E, method)
                                           : complex{};
                auto f = [&](double x) {
                    const double a = 0.5 * E + x, b = 0.5 * E - x;
                    complex v = with_lin ? ctx.lin(pair, a, b) : complex{};
                    if (with_corr) {
                        complex dout = 1.0;
                        for (int k = 0; k < 2; ++k)
                            dout *= (a - ctx.shifted_one()[k]) * (b - ctx.shifted_one()[k]);
                        v += kernel / dout;
                    }
                    return std::norm(v);
                };
                return integrate(f, x_pts, inner).value;
            },
            e_pts, opt);
    }
    if (!res.converged)
        throw quad_failure("sector integral did not converge near E=" + std::to_string(res.worst_x),
                           res.worst_x);
    if (err_out) *err_out = res.abs_err;
    return res.value;
}

SectorProbabilities sector_probabilities(const TwoPhotonInput& input, const JcParams& params,
                                         CorrMethod method)
{
    TwoPhotonAmplitude ctx(input, params);
    QuadOptions opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-8;
    const double p11 = 0.5 * integral_abs2(ctx, PortPair::P11, true, true, method, opt, nullptr);
    const double p22 = 0.5 * integral_abs2(ctx, PortPair::P22, true, true, method, opt, nullptr);
    const double p12 = integral_abs2(ctx, PortPair::P12, true, true, method, opt, nullptr);
    return {p11, p22, p12};
}

} // namespace jchom
