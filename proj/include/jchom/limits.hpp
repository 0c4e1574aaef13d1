#pragma once

#include "jchom/scattering.hpp"

namespace jchom {

/// Effective Kerr cavity seen by photons near the cavity-like polariton line
/// in the dispersive regime. sign(U) is opposite to sign(delta).
struct KerrParams {
    double omega_bar_c;
    double U;
    double kappa;
    bool within_validity; // |delta|/g >= 5
};

/// Effective weakly coupled two-level system near the qubit-like line.
/// omega_bar_q_next carries the next series order g^4/delta^3, which two
/// parts of the source material quote differently; both are exposed.
struct TlsParams {
    double omega_bar_q;
    double kappa_bar;
    double omega_bar_q_next;
    bool within_validity;
};

/// Series values omega_bar_c = omega_c + g^2/delta - g^4/delta^3 and
/// U = -2 g^4/delta^3. Rejects delta = 0; outside |delta|/g >= 5 the
/// within_validity flag is cleared instead of rejecting.
KerrParams dispersive_kerr_params(const JcParams& p);

/// Exact alternative for error analysis: omega_bar_c and U from the ladder
/// energies of the cavity-like branch (sign of delta selects the branch).
KerrParams dispersive_kerr_params_exact(const JcParams& p);

/// omega_bar_q = omega_q - g^2/delta, kappa_bar = kappa g^2/delta^2.
TlsParams dispersive_tls_params(const JcParams& p);

/// Kerr-regime reduced T-matrix element (nu2' eliminated):
///   -kappa^2 U/pi (E - 2 omega_bar_c + 2 i kappa)/(E - 2 omega_bar_c - U + 2 i kappa)
///     / prod_i (nu_i' - omega_bar_c + i kappa)(nu_i - omega_bar_c + i kappa).
complex kerr_t2_reduced(complex nu1p, complex nu1, complex nu2, const KerrParams& kp);

/// TLS-regime reduced T-matrix element:
///   kappa_bar^2/pi (E - 2 omega_bar_q + 2 i kappa_bar)
///     / prod_i (nu_i' - omega_bar_q + i kappa_bar)(nu_i - omega_bar_q + i kappa_bar).
complex tls_t2_reduced(complex nu1p, complex nu1, complex nu2, const TlsParams& tp);

/// Single-photon amplitudes of the limiting models, assembled from the
/// unimodular even-mode amplitude via r = (s+1)/2, t = (s-1)/2.
SingleAmps limit_single_amps(double nu, const KerrParams& kp);
SingleAmps limit_single_amps(double nu, const TlsParams& tp);

} // namespace jchom
