#pragma once

#include "jchom/amplitudes.hpp"

namespace jchom {

/// Brute-force evaluator settings. Oracle tolerances are deliberately looser
/// than the main-path internal tolerances: the oracle referees, it does not
/// ship numbers.
struct QuadSpec {
    double abs_tol = 3e-8;
    double rel_tol = 1e-5;
    double window_factor = 50.0;
    int max_depth = 44;

    void validate() const;
};

/// Eq.-22 correlation term by direct adaptive Simpson quadrature of the full
/// T-matrix element folded with both packets, no residue shortcuts and no
/// kernel factorization. The integration kernel is separate from the main
/// path's Gauss-Kronrod machinery, so agreement is evidence.
complex quad_corr_term(double nu1p, double nu2p, const TwoPhotonInput& input,
                       const JcParams& params, const QuadSpec& spec = {},
                       double* abs_err = nullptr);

/// HOM parameter by nested Simpson quadrature over the two outgoing
/// frequencies (unrotated coordinates), the correlation term recomputed from
/// scratch at every point.
double quad_gamma(const TwoPhotonInput& input, const JcParams& params,
                  const QuadSpec& spec = {});

/// Raw correlation G2_ij(tau) by direct double quadrature over the total
/// energy and the transform variable.
double quad_g2(PortPair pair, double tau, const TwoPhotonInput& input, const JcParams& params,
               const QuadSpec& spec = {});

} // namespace jchom
