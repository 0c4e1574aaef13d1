#include "jchom/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jchom {

namespace {

// |H_E(tau)|^2 with H the inner transform of the amplitude along the
// anti-diagonal at total energy E.
double transform_abs2(const TwoPhotonAmplitude& ctx, PortPair pair, double E, double tau,
                      CorrMethod method)
{
    if (method == CorrMethod::Residue && ctx.residue_usable())
        return std::norm(ctx.anti_diagonal(pair, E).fourier(tau));

    const auto x_pts = ctx.delta_breakpoints(E);
    const complex kernel = ctx.input_norm() * ctx.corr_kernel(E, method);
    auto f = [&](double x) {
        const double a = 0.5 * E + x, b = 0.5 * E - x;
        complex dout = 1.0;
        for (int k = 0; k < 2; ++k)
            dout *= (a - ctx.shifted_one()[k]) * (b - ctx.shifted_one()[k]);
        const complex v = ctx.lin(pair, a, b) + kernel / dout;
        return std::exp(complex(0.0, x * tau)) * v;
    };
    QuadOptions opt;
    opt.abs_tol = 1e-11;
    opt.rel_tol = 1e-8;
    const auto res = integrate_complex(f, x_pts, opt);
    if (!res.converged)
        throw quad_failure("g2 inner transform did not converge (E=" + std::to_string(E) + ")",
                           res.worst_x);
    return std::norm(res.value);
}

double g2_of_context(const TwoPhotonAmplitude& ctx, PortPair pair, double tau, CorrMethod method,
                     double* abs_err = nullptr)
{
    QuadOptions opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-7;
    const auto pts = ctx.energy_breakpoints();
    const auto res = integrate_real_line(
        [&](double E) { return transform_abs2(ctx, pair, E, tau, method); }, pts, opt);
    if (!res.converged)
        throw quad_failure("g2 energy integral did not converge near E="
                               + std::to_string(res.worst_x),
                           res.worst_x);
    if (abs_err) *abs_err = res.abs_err / (2.0 * pi);
    return res.value / (2.0 * pi);
}

// Partial fractions of a scattered single-photon spectrum s(nu) f(nu) with
// zero arrival time; all three poles sit in the lower half-plane, so the
// time profile is rho(t) = 2pi |sum_k c_k e^{-i p_k t}|^2 for t > 0.
struct ScatteredProfile {
    complex poles[3];
    complex residues[3];
};

ScatteredProfile scattered_profile(const LorentzianPacket& packet, const JcParams& par,
                                   bool transmitted)
{
    const complex e_up = jc_energy_shifted(1, Branch::Upper, par);
    const complex e_lo = jc_energy_shifted(1, Branch::Lower, par);
    const complex q(packet.nu0, -0.5 * packet.xi);
    const double s = std::sqrt(packet.xi / (2.0 * pi));
    auto numerator = [&](complex nu) {
        return transmitted ? complex(0.0, -par.kappa) * (nu - par.omega_q)
                           : (nu - par.omega_q) * (nu - par.omega_c) - par.g * par.g;
    };
    ScatteredProfile out;
    out.poles[0] = e_up;
    out.poles[1] = e_lo;
    out.poles[2] = q;
    out.residues[0] = s * numerator(e_up) / ((e_up - e_lo) * (e_up - q));
    out.residues[1] = s * numerator(e_lo) / ((e_lo - e_up) * (e_lo - q));
    out.residues[2] = s * numerator(q) / ((q - e_up) * (q - e_lo));
    return out;
}

// Int_0^inf rho_a(t) rho_b(t) dt for two scattered profiles with aligned
// arrival fronts.
double profile_product_integral(const ScatteredProfile& a, const ScatteredProfile& b)
{
    complex total{};
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n) {
                    const complex z = a.poles[k] - std::conj(a.poles[l]) + b.poles[m]
                                    - std::conj(b.poles[n]);
                    total += a.residues[k] * std::conj(a.residues[l]) * b.residues[m]
                           * std::conj(b.residues[n]) * (-ii / z);
                }
    return 4.0 * pi * pi * total.real();
}

void require_identical_shapes(const TwoPhotonInput& in, const char* who)
{
    if (!in.identical_packets())
        throw std::invalid_argument(std::string(who) + ": identical packet shapes required");
}

} // namespace

double g2_raw(PortPair pair, double tau, const TwoPhotonInput& input, const JcParams& params,
              CorrMethod method, double* abs_err)
{
    TwoPhotonAmplitude ctx(input, params);
    return g2_of_context(ctx, pair, tau, method, abs_err);
}

double g2_norm_constant_analytic(PortPair pair, const TwoPhotonInput& input,
                                 const JcParams& params)
{
    require_identical_shapes(input, "g2_norm_constant");

    // Independent-scattering product: each photon goes where its single-photon
    // amplitude sends it, both classical orderings summed.
    const bool same_side = input.ports == PortConfig::SameWaveguide1;
    auto guide_profile = [&](int packet, int guide) {
        const LorentzianPacket& p = packet == 1 ? input.packet1 : input.packet2;
        const bool entered_1 = same_side || packet == 1;
        const bool transmitted = (guide == 1) != entered_1;
        return scattered_profile(p, params, transmitted);
    };
    const int gi = (pair == PortPair::P22) ? 2 : 1;
    const int gj = (pair == PortPair::P11) ? 1 : 2;
    const double v_ij = profile_product_integral(guide_profile(1, gi), guide_profile(2, gj));
    const double v_ji = profile_product_integral(guide_profile(2, gi), guide_profile(1, gj));
    return v_ij + v_ji;
}

double g2_norm_constant(PortPair pair, const TwoPhotonInput& input, const JcParams& params)
{
    const double analytic = g2_norm_constant_analytic(pair, input, params);

    // Defining limit at dt = n/xi, stabilized to 1e-4 relative change, as a
    // live check against the closed form.
    const double xi = input.packet1.xi;
    TwoPhotonInput delayed = input;
    delayed.packet2.t_arr = 0.0;
    double previous = 0.0;
    bool stable = false;
    for (int n = 16; n <= 128; n *= 2) {
        const double dt = double(n) / xi;
        delayed.packet1.t_arr = dt;
        TwoPhotonAmplitude ctx(delayed, params);
        const double value = g2_of_context(ctx, pair, dt, CorrMethod::Residue)
                           + g2_of_context(ctx, pair, -dt, CorrMethod::Residue);
        if (n > 16 && std::abs(value - previous) <= 1e-4 * std::abs(value)) {
            previous = value;
            stable = true;
            break;
        }
        previous = value;
    }
    if (!stable)
        throw quad_failure("g2_norm_constant: defining limit did not stabilize", 0.0);
    if (std::abs(previous - analytic) > 1e-3 * std::abs(analytic))
        throw quad_failure("g2_norm_constant: defining limit disagrees with the "
                           "independent-scattering product",
                           previous);
    return analytic;
}

double g2_normalized(PortPair pair, double tau, const TwoPhotonInput& input,
                     const JcParams& params)
{
    return g2_raw(pair, tau, input, params) / g2_norm_constant(pair, input, params);
}

double g2_cross_asymptotic(double tau, double dt, double xi)
{
    return 0.125 * xi * (std::exp(-xi * std::abs(tau - dt)) + std::exp(-xi * std::abs(tau + dt)));
}

PhotonMoments photon_number_moments(const TwoPhotonInput& input, const JcParams& params)
{
    if (input.ports != PortConfig::DifferentWaveguides || !input.identical_packets()
        || input.time_delay() != 0.0)
        throw std::invalid_argument(
            "photon_number_moments: symmetric-case relations refused for asymmetric input");

    TwoPhotonAmplitude ctx(input, params);
    QuadOptions opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-8;
    const double n1n2 = integral_abs2(ctx, PortPair::P12, true, true, CorrMethod::Residue, opt,
                                      nullptr);
    const double g11_integral = integral_abs2(ctx, PortPair::P11, true, true, CorrMethod::Residue,
                                              opt, nullptr);
    PhotonMoments m;
    m.n1 = 1.0; // forced by the waveguide exchange symmetry
    m.n1_sq = g11_integral + 1.0;
    m.n1_n2 = n1n2;
    m.var_n1 = m.n1_sq - 1.0;
    return m;
}

CorrelationTrace correlation_trace(PortPair pair, const TwoPhotonInput& input,
                                   const JcParams& params, const TraceOptions& opt)
{
    TwoPhotonAmplitude ctx(input, params);
    const double xi = std::min(input.packet1.xi, input.packet2.xi);
    const double dt = std::abs(input.time_delay());
    double span = opt.span;
    if (span <= 0.0)
        span = std::max({10.0 / xi, 5.0 / params.kappa, 2.0 * dt + 5.0 / xi});
    double step = opt.step;
    if (step <= 0.0) step = std::min(1.0 / params.kappa, 1.0 / xi) / 20.0;
    const int n = int(std::ceil(2.0 * span / step)) + 1;

    CorrelationTrace tr;
    tr.pair = pair;
    tr.tau_grid.resize(n);
    tr.raw_values.resize(n);

    if (ctx.residue_usable()) {
        // Freeze the energy panels once (refined where the amplitude lives,
        // probed at the staircase of delays) and reuse the per-node pole
        // forms for the whole trace.
        QuadOptions eopt;
        eopt.abs_tol = 1e-9;
        eopt.rel_tol = 1e-7;
        auto density = [&](double E) {
            const PoleForm f = ctx.anti_diagonal(pair, E);
            double v = f.abs2_integral();
            v += std::norm(f.fourier(dt)) + std::norm(f.fourier(-dt));
            return v;
        };
        const auto grid = real_line_nodes(density, ctx.energy_breakpoints(), eopt);

        struct Node {
            double weight;
            PoleForm form;
        };
        std::vector<Node> nodes;
        nodes.reserve(grid.size());
        for (const QuadNode& qn : grid)
            nodes.push_back({qn.weight, ctx.anti_diagonal(pair, qn.x)});
        for (int i = 0; i < n; ++i) {
            const double tau = -span + i * step;
            double sum = 0.0;
            for (const Node& nd : nodes) sum += nd.weight * std::norm(nd.form.fourier(tau));
            tr.tau_grid[i] = tau;
            tr.raw_values[i] = sum / (2.0 * pi);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            const double tau = -span + i * step;
            tr.tau_grid[i] = tau;
            tr.raw_values[i] = g2_of_context(ctx, pair, tau, CorrMethod::Quadrature);
        }
    }

    if (opt.normalized) {
        tr.norm_const = g2_norm_constant(pair, input, params);
        tr.values.resize(n);
        for (int i = 0; i < n; ++i) tr.values[i] = tr.raw_values[i] / tr.norm_const;
    }

    tr.integral = 0.0;
    for (int i = 0; i + 1 < n; ++i)
        tr.integral += 0.5 * (tr.raw_values[i] + tr.raw_values[i + 1]) * step;
    return tr;
}

} // namespace jchom
