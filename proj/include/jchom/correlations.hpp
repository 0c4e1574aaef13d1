#pragma once

#include "jchom/amplitudes.hpp"

namespace jchom {

/// Time-integrated two-detector correlation
///   G2_ij(tau) = 1/2pi Int dE |Int dx e^{i x tau} A^{ij}(E/2+x, E/2-x)|^2,
/// the inner transform by residues over the pole form of the amplitude
/// (adaptive quadrature when the residue route is unavailable).
double g2_raw(PortPair pair, double tau, const TwoPhotonInput& input, const JcParams& params,
              CorrMethod method = CorrMethod::Residue, double* abs_err = nullptr);

/// Uncorrelated normalization G2_{ij,inf}: the large-delay limit of
/// G2(tau = +dt) + G2(tau = -dt), i.e. two distinguishable photons scattered
/// independently. Evaluated in closed form from the single-photon time
/// profiles and cross-checked against the defining limit at dt = n/xi until
/// the relative change drops below 1e-4. Identical packet shapes required.
double g2_norm_constant(PortPair pair, const TwoPhotonInput& input, const JcParams& params);

/// The closed-form route alone (no defining-limit cross-check); what sweeps
/// use after the first point has validated the pair of routes.
double g2_norm_constant_analytic(PortPair pair, const TwoPhotonInput& input,
                                 const JcParams& params);

/// g2_ij(tau) = G2_ij(tau) / G2_{ij,inf}.
double g2_normalized(PortPair pair, double tau, const TwoPhotonInput& input,
                     const JcParams& params);

/// Large-delay closed form of the cross correlation at a 50/50 point,
///   (xi/8)(e^{-xi|tau-dt|} + e^{-xi|tau+dt|}),
/// valid for dt >> 1/xi >> 1/kappa; integrates to 1/2.
double g2_cross_asymptotic(double tau, double dt, double xi);

/// Photon-number moments of the outgoing state for the symmetric input
/// (identical packets, zero delay, different waveguides): <n1> = 1,
/// <n1^2> = 2 - gamma, <n1 n2> = gamma, <dn1^2> = 1 - gamma. Asymmetric
/// inputs are refused since the symmetry relations do not apply.
struct PhotonMoments {
    double n1;
    double n1_sq;
    double n1_n2;
    double var_n1;
};
PhotonMoments photon_number_moments(const TwoPhotonInput& input, const JcParams& params);

struct TraceOptions {
    double span = 0.0;  // half-width of the tau grid; 0 = automatic
    double step = 0.0;  // grid step; 0 = automatic
    bool normalized = true;
};

/// Sampled correlation trace over a uniform tau grid. The grid spans
/// +-max(10/xi, 5/kappa, 2|dt| + 5/xi) with step min(1/kappa, 1/xi)/20 by
/// default, resolving both the packet envelope and the cavity time scale.
struct CorrelationTrace {
    PortPair pair;
    std::vector<double> tau_grid;
    std::vector<double> raw_values;
    std::vector<double> values; // raw / norm_const (empty when not normalized)
    double norm_const = 0.0;
    double integral = 0.0; // trapezoidal Int dtau of raw_values
};
CorrelationTrace correlation_trace(PortPair pair, const TwoPhotonInput& input,
                                   const JcParams& params, const TraceOptions& opt = {});

} // namespace jchom
