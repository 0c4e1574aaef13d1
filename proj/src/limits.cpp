#include "jchom/limits.hpp"

#include <cmath>
#include <stdexcept>

namespace jchom {

namespace {

double checked_delta(const JcParams& p, const char* who)
{
    p.validate();
    const double delta = p.delta();
    if (delta == 0.0)
        throw std::invalid_argument(std::string(who) + ": delta = 0 has no dispersive limit");
    return delta;
}

} // namespace

KerrParams dispersive_kerr_params(const JcParams& p)
{
    const double d = checked_delta(p, "dispersive_kerr_params");
    const double g2 = p.g * p.g;
    const double g4 = g2 * g2;
    KerrParams kp;
    kp.omega_bar_c = p.omega_c + g2 / d - g4 / (d * d * d);
    kp.U = -2.0 * g4 / (d * d * d);
    kp.kappa = p.kappa;
    kp.within_validity = std::abs(d) >= 5.0 * p.g;
    return kp;
}

KerrParams dispersive_kerr_params_exact(const JcParams& p)
{
    const double d = checked_delta(p, "dispersive_kerr_params_exact");
    const Branch cavity_like = d > 0.0 ? Branch::Upper : Branch::Lower;
    KerrParams kp;
    kp.omega_bar_c = jc_energy(1, cavity_like, p);
    kp.U = jc_energy(2, cavity_like, p) - 2.0 * kp.omega_bar_c;
    kp.kappa = p.kappa;
    kp.within_validity = std::abs(d) >= 5.0 * p.g;
    return kp;
}

TlsParams dispersive_tls_params(const JcParams& p)
{
    const double d = checked_delta(p, "dispersive_tls_params");
    const double g2 = p.g * p.g;
    TlsParams tp;
    tp.omega_bar_q = p.omega_q - g2 / d;
    tp.omega_bar_q_next = tp.omega_bar_q + g2 * g2 / (d * d * d);
    tp.kappa_bar = p.kappa * g2 / (d * d);
    tp.within_validity = std::abs(d) >= 5.0 * p.g;
    return tp;
}

complex kerr_t2_reduced(complex nu1p, complex nu1, complex nu2, const KerrParams& kp)
{
    const complex E = nu1 + nu2;
    const complex nu2p = E - nu1p;
    const complex shift(0.0, kp.kappa);
    const complex num = E - 2.0 * kp.omega_bar_c + 2.0 * shift;
    const complex den_res = E - 2.0 * kp.omega_bar_c - kp.U + 2.0 * shift;
    complex den = den_res;
    for (const complex& nu : {nu1p, nu2p, nu1, nu2}) den *= (nu - kp.omega_bar_c + shift);
    return -kp.kappa * kp.kappa * kp.U / pi * num / den;
}

complex tls_t2_reduced(complex nu1p, complex nu1, complex nu2, const TlsParams& tp)
{
    const complex E = nu1 + nu2;
    const complex nu2p = E - nu1p;
    const complex shift(0.0, tp.kappa_bar);
    const complex num = E - 2.0 * tp.omega_bar_q + 2.0 * shift;
    complex den = 1.0;
    for (const complex& nu : {nu1p, nu2p, nu1, nu2}) den *= (nu - tp.omega_bar_q + shift);
    return tp.kappa_bar * tp.kappa_bar / pi * num / den;
}

namespace {

SingleAmps from_even_mode(double nu, double center, double width)
{
    const complex s = complex(nu - center, -width) / complex(nu - center, width);
    return {0.5 * (s + 1.0), 0.5 * (s - 1.0), s};
}

} // namespace

SingleAmps limit_single_amps(double nu, const KerrParams& kp)
{
    return from_even_mode(nu, kp.omega_bar_c, kp.kappa);
}

SingleAmps limit_single_amps(double nu, const TlsParams& tp)
{
    return from_even_mode(nu, tp.omega_bar_q, tp.kappa_bar);
}

} // namespace jchom
