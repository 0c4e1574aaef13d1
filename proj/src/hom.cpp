#include "jchom/hom.hpp"

#include "jchom/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace jchom {

namespace {

double require_symmetric_carriers(const TwoPhotonInput& in)
{
    if (in.packet1.xi != in.packet2.xi)
        throw std::invalid_argument("hom_gamma: dispersive closed forms need equal widths");
    if (in.time_delay() != 0.0)
        throw std::invalid_argument("hom_gamma: dispersive closed forms assume zero delay");
    return in.packet1.xi;
}

} // namespace

HomResult hom_gamma(const TwoPhotonInput& input, const JcParams& params, HomMethod method)
{
    if (input.ports != PortConfig::DifferentWaveguides)
        throw std::invalid_argument("hom_gamma: input must use different waveguides");

    if (method == HomMethod::KerrLimit) {
        const double xi = require_symmetric_carriers(input);
        const KerrParams kp = dispersive_kerr_params(params);
        const double e0c = input.packet1.nu0 + input.packet2.nu0 - 2.0 * kp.omega_bar_c;
        return {hom_gamma_kerr(e0c, kp.U, kp.kappa, xi), method, 0.0};
    }
    if (method == HomMethod::TlsLimit) {
        const double xi = require_symmetric_carriers(input);
        const TlsParams tp = dispersive_tls_params(params);
        const double e0q = input.packet1.nu0 + input.packet2.nu0 - 2.0 * tp.omega_bar_q;
        return {hom_gamma_tls(e0q, tp.kappa_bar, xi), method, 0.0};
    }

    TwoPhotonAmplitude ctx(input, params);
    QuadOptions opt;
    opt.abs_tol = 1e-8;
    opt.rel_tol = 1e-6;

    HomResult out;
    out.method = method;
    double err = 0.0;
    switch (method) {
    case HomMethod::ExactResidue:
        if (!ctx.residue_usable()) out.method = HomMethod::ExactQuadrature;
        out.gamma = integral_abs2(ctx, PortPair::P12, true, true,
                                  out.method == HomMethod::ExactResidue ? CorrMethod::Residue
                                                                        : CorrMethod::Quadrature,
                                  opt, &err);
        break;
    case HomMethod::ExactQuadrature:
        out.gamma = integral_abs2(ctx, PortPair::P12, true, true, CorrMethod::Quadrature, opt, &err);
        break;
    case HomMethod::Linear:
        out.gamma = integral_abs2(ctx, PortPair::P12, true, false, CorrMethod::Residue, opt, &err);
        break;
    default:
        break;
    }
    out.error_estimate = err;
    return out;
}

double hom_gamma_linear(double nu0, const JcParams& params)
{
    const BeamSplitterEnergies om = beam_splitter_energies(params);
    const complex e_up = jc_energy_shifted(1, Branch::Upper, params);
    const complex e_lo = jc_energy_shifted(1, Branch::Lower, params);

    auto sq = [](double x) { return x * x; };
    const double num = sq(2.0 * (nu0 - om.first_upper)) * sq(2.0 * (nu0 - om.second_upper))
                     * sq(2.0 * (nu0 - om.first_lower)) * sq(2.0 * (nu0 - om.second_lower));
    const double den = sq(std::norm(2.0 * (nu0 - e_up))) * sq(std::norm(2.0 * (nu0 - e_lo)));
    return num / den;
}

double hom_gamma_kerr(double e0c, double U, double kappa, double xi)
{
    if (U == 0.0)
        throw std::invalid_argument("hom_gamma_kerr: U = 0 (formula carries 1/U terms)");
    if (!(xi > 0.0) || !(kappa > 0.0))
        throw std::invalid_argument("hom_gamma_kerr: xi and kappa must be > 0");

    const double k2 = 2.0 * kappa;
    const double term1 = -k2 * k2 * U * (2.0 * e0c * xi + U * (k2 + 3.0 * xi))
                       / (xi * (e0c * e0c + (k2 + 3.0 * xi) * (k2 + 3.0 * xi))
                          * (U * U + 4.0 * xi * xi));
    const double term2 = (2.0 * k2 * k2 * e0c * xi
                          - (2.0 * xi * xi + k2 * xi - k2 * k2) * k2 * U)
                       / (xi * U * (e0c * e0c + (xi + k2) * (xi + k2)));
    const double term3 = 4.0 * xi * k2 * k2 * ((xi - k2) * U - 2.0 * e0c * xi)
                       / (U * (U * U + 4.0 * xi * xi)
                          * ((e0c - U) * (e0c - U) + (xi + k2) * (xi + k2)));
    return 1.0 + term1 + term2 + term3;
}

double hom_gamma_tls(double e0q, double kappa_bar, double xi)
{
    if (!(xi > 0.0) || !(kappa_bar >= 0.0))
        throw std::invalid_argument("hom_gamma_tls: bad arguments");

    const complex a(e0q, 2.0 * kappa_bar + xi);
    const complex b(e0q, 2.0 * kappa_bar + 3.0 * xi);
    const complex mk(0.0, -2.0 * kappa_bar);
    const complex sum = mk / a + mk * mk / (a * b)
                      + (-mk) / std::conj(a) + mk * mk / (std::conj(a) * std::conj(b));
    const double scale = std::max(1.0, std::abs(sum));
    if (std::abs(sum.imag()) > 1e-12 * scale)
        throw std::logic_error("hom_gamma_tls: conjugate-pair structure violated");
    return 1.0 + sum.real();
}

} // namespace jchom
