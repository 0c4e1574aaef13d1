#include "jchom/scattering.hpp"

namespace jchom {

namespace {

complex denom(double nu, const JcParams& p)
{
    return (nu - p.omega_q) * complex(nu - p.omega_c, p.kappa) - p.g * p.g;
}

} // namespace

complex reflection_amp(double nu, const JcParams& p)
{
    const double num = (nu - p.omega_q) * (nu - p.omega_c) - p.g * p.g;
    return num / denom(nu, p);
}

complex transmission_amp(double nu, const JcParams& p)
{
    return complex(0.0, -p.kappa) * (nu - p.omega_q) / denom(nu, p);
}

complex even_mode_amp(double nu, const JcParams& p)
{
    const complex e_up = jc_energy_shifted(1, Branch::Upper, p);
    const complex e_lo = jc_energy_shifted(1, Branch::Lower, p);
    return (nu - std::conj(e_up)) * (nu - std::conj(e_lo))
         / ((nu - e_up) * (nu - e_lo));
}

SingleAmps single_amps(double nu, const JcParams& p)
{
    return {reflection_amp(nu, p), transmission_amp(nu, p), even_mode_amp(nu, p)};
}

complex t2_reduced(complex nu1p, complex nu1, complex nu2, const JcParams& p)
{
    const complex E = nu1 + nu2;
    const complex nu2p = E - nu1p;
    const complex e1[2] = {jc_energy_shifted(1, Branch::Upper, p),
                           jc_energy_shifted(1, Branch::Lower, p)};
    const complex e2[2] = {jc_energy_shifted(2, Branch::Upper, p),
                           jc_energy_shifted(2, Branch::Lower, p)};

    const double pref = p.kappa * p.kappa * p.g * p.g * p.g * p.g / pi;
    const complex num = (E - e1[0] - e1[1]) * (E - 2.0 * e1[0]) * (E - 2.0 * e1[1]);
    complex den = (E - e2[0]) * (E - e2[1]);
    for (const complex& e : e1)
        den *= (nu1p - e) * (nu2p - e) * (nu1 - e) * (nu2 - e);
    return pref * num / den;
}

} // namespace jchom
