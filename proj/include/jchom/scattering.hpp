#pragma once

#include "jchom/spectrum.hpp"

namespace jchom {

/// Same-waveguide (reflection) amplitude
///   r_nu = ((nu-omega_q)(nu-omega_c) - g^2) / ((nu-omega_q)(nu-omega_c+i kappa) - g^2).
/// Vanishes at the one-polariton energies eps_{1,+-} (dipole-induced transparency).
complex reflection_amp(double nu, const JcParams& p);

/// Other-waveguide (transmission) amplitude
///   t_nu = -i kappa (nu-omega_q) / ((nu-omega_q)(nu-omega_c+i kappa) - g^2).
/// Vanishes at the bare qubit frequency.
complex transmission_amp(double nu, const JcParams& p);

/// Even-mode scattering amplitude, unimodular on the real axis:
///   s_e = (nu - conj(eps~_{1+}))(nu - conj(eps~_{1-})) / ((nu - eps~_{1+})(nu - eps~_{1-})).
complex even_mode_amp(double nu, const JcParams& p);

struct SingleAmps {
    complex r;
    complex t;
    complex s_e;
};

/// All three single-photon amplitudes at once. They satisfy r = (s_e+1)/2,
/// t = (s_e-1)/2 and |r|^2 + |t|^2 = 1 on the real axis.
SingleAmps single_amps(double nu, const JcParams& p);

/// Reduced two-photon T-matrix element: the coefficient of
/// delta(nu1' + nu2' - nu1 - nu2), with nu2' = nu1 + nu2 - nu1' eliminated:
///
///   kappa^2 g^4 / pi
///     * (E - eps~_{1+} - eps~_{1-}) prod_a (E - 2 eps~_{1a})
///     / [ prod_a (E - eps~_{2a})
///         prod_a (nu1'-eps~_{1a})(nu2'-eps~_{1a})(nu1-eps~_{1a})(nu2-eps~_{1a}) ],
///
/// E = nu1 + nu2. Symmetric in (nu1, nu2) and in (nu1', nu2'), independent of
/// waveguide indices. Complex arguments are allowed: contour evaluation needs
/// the same rational function off the real axis.
complex t2_reduced(complex nu1p, complex nu1, complex nu2, const JcParams& p);

} // namespace jchom
