#pragma once

#include "jchom/amplitudes.hpp"

namespace jchom {

enum class HomMethod {
    ExactResidue,    // correlation part and inner integral by residues
    ExactQuadrature, // everything by adaptive quadrature
    Linear,          // T-matrix part dropped, finite packet width kept
    KerrLimit,       // dispersive closed form around the cavity-like line
    TlsLimit,        // dispersive closed form around the qubit-like line
};

struct HomResult {
    double gamma = 0.0;
    HomMethod method = HomMethod::ExactResidue;
    double error_estimate = 0.0;
};

/// Coincidence probability gamma = <n1 n2> of finding one photon in each
/// output waveguide, from the 2-D integral of |A^{12}|^2. gamma = 0 marks a
/// path-entangled NOON state, gamma = 1 an uncorrelated one-photon-each state.
HomResult hom_gamma(const TwoPhotonInput& input, const JcParams& params,
                    HomMethod method = HomMethod::ExactResidue);

/// Sharp-packet linear-approximation closed form (equal carriers, zero delay):
///   gamma_lin = prod_s (2nu0 - 2 Omega^{(1)}_s)^2 (2nu0 - 2 Omega^{(2)}_s)^2
///               / |2nu0 - 2 eps~_{1,s}|^4.
/// Zero exactly at the beam-splitter energies.
double hom_gamma_linear(double nu0, const JcParams& params);

/// Dispersive Kerr-regime closed form; e0c = nu01 + nu02 - 2 omega_bar_c.
/// The expression carries 1/U terms, so U = 0 is rejected (take the limit
/// through hom_gamma instead).
double hom_gamma_kerr(double e0c, double U, double kappa, double xi);

/// Dispersive two-level-system closed form; e0q = nu01 + nu02 - 2 omega_bar_q.
/// The five terms come in conjugate pairs; the imaginary part is checked to
/// vanish.
double hom_gamma_tls(double e0q, double kappa_bar, double xi);

} // namespace jchom
