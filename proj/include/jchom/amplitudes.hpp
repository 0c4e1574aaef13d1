#pragma once

#include "jchom/pole_form.hpp"
#include "jchom/quadrature.hpp"
#include "jchom/scattering.hpp"

#include <vector>

namespace jchom {

/// Output-port pair of the two-photon sector.
enum class PortPair { P11, P22, P12 };

/// How the correlation integral (the T-matrix term) is evaluated.
enum class CorrMethod { Residue, Quadrature };

/// Outgoing two-photon amplitude split into the uncorrelated product part
/// and the T-matrix (correlation) part.
struct OutAmplitude {
    PortPair pair;
    complex lin;
    complex corr;
    complex total() const { return lin + corr; }
};

/// Evaluation context for the outgoing two-photon amplitudes of one input
/// state. Precomputes the shifted polariton energies and packet constants,
/// exposes pointwise amplitudes and the partial-fraction decomposition of
/// A(E/2+x, E/2-x) along the anti-diagonal at fixed total energy E, which is
/// what the HOM and correlation integrals consume.
///
/// Pole bookkeeping is table-driven: every factor of the amplitude (r, t,
/// packet, T-matrix denominator) registers its simple poles in its own
/// variable; the assembler maps them onto the integration variable and keeps
/// track of orientation signs and packet phases.
class TwoPhotonAmplitude {
public:
    TwoPhotonAmplitude(const TwoPhotonInput& input, const JcParams& params);

    const TwoPhotonInput& input() const { return in_; }
    const JcParams& params() const { return par_; }

    /// Input-state normalization: 1 for different waveguides,
    /// 1/sqrt(1 + |<f1,f2>|^2) for the same-waveguide state.
    double input_norm() const { return norm_; }

    /// False when a parameter-level pole collision (e.g. a packet tuned
    /// exactly onto a resonance with matching width) forces quadrature.
    bool residue_usable() const { return residue_ok_; }

    /// Uncorrelated part of A^{pair}(nu1p, nu2p).
    complex lin(PortPair pair, double nu1p, double nu2p) const;

    /// Correlation part (port-independent), including the input norm.
    complex corr(double nu1p, double nu2p, CorrMethod method = CorrMethod::Residue) const;

    /// corr = corr_kernel(nu1p + nu2p) / prod_a (nu1p - eps~_1a)(nu2p - eps~_1a).
    complex corr_kernel(double E, CorrMethod method = CorrMethod::Residue) const;

    complex amp(PortPair pair, double nu1p, double nu2p,
                CorrMethod method = CorrMethod::Residue) const;

    /// Partial fractions of x -> A^{pair}(E/2+x, E/2-x) at fixed E.
    PoleForm anti_diagonal(PortPair pair, double E, bool with_lin = true,
                           bool with_corr = true) const;

    /// Center, half-width and seeded breakpoints of the total-energy axis.
    double energy_center() const;
    double energy_window() const;
    std::vector<double> energy_breakpoints() const;

    /// Seeded breakpoints for the anti-diagonal coordinate at fixed E.
    std::vector<double> delta_breakpoints(double E) const;

    /// Breakpoints for the inner correlation integral over nu1 at fixed E.
    std::vector<double> corr_breakpoints(double E) const;

    const complex* shifted_one() const { return e1t_; } // eps~_{1,+-}
    const complex* shifted_two() const { return e2t_; } // eps~_{2,+-}

private:
    TwoPhotonInput in_;
    JcParams par_;
    complex e1t_[2];
    complex e2t_[2];
    double e1_[2];
    double norm_ = 1.0;
    bool residue_ok_ = true;

    complex corr_kernel_residue(double E) const;
    complex corr_kernel_quad(double E) const;
};

/// Uncorrelated outgoing amplitude for two photons fed in from different
/// waveguides (packet1 in line 1, packet2 in line 2).
complex out_amplitude_lin(PortPair pair, double nu1p, double nu2p,
                          const TwoPhotonInput& input, const JcParams& params);

/// Correlation term C(nu1p, nu2p): the T-matrix element folded with both
/// packets, the energy delta resolved to a single frequency integral. The
/// residue method closes the contour in the half-plane selected by the sign
/// of the packet delay; the quadrature method integrates over a truncated
/// window and checks the rational tail bound. Degenerate pole configurations
/// fall back to quadrature.
complex out_corr_term(double nu1p, double nu2p, const TwoPhotonInput& input,
                      const JcParams& params, CorrMethod method = CorrMethod::Residue);

/// Full amplitude A = lin + corr for the different-waveguide input.
OutAmplitude out_amplitude_full(PortPair pair, double nu1p, double nu2p,
                                const TwoPhotonInput& input, const JcParams& params,
                                CorrMethod method = CorrMethod::Residue);

/// Full amplitude for the same-waveguide input state (both packets in line 1),
/// normalized so the total outgoing probability is 1.
OutAmplitude same_side_amplitudes(PortPair pair, double nu1p, double nu2p,
                                  const TwoPhotonInput& input, const JcParams& params,
                                  CorrMethod method = CorrMethod::Residue);

/// Int dnu1p dnu2p |A^{pair}|^2 in rotated coordinates (outer integral over
/// the total energy, inner one closed by residues when available, otherwise
/// adaptive). The lin/corr switches select amplitude pieces, e.g. the linear
/// approximation drops the correlation part.
double integral_abs2(const TwoPhotonAmplitude& ctx, PortPair pair, bool with_lin,
                     bool with_corr, CorrMethod method, const QuadOptions& opt,
                     double* err_out);

/// Integrated sector probabilities: P(both in 1), P(both in 2), P(one each).
/// They sum to 1 for any input (unitarity).
struct SectorProbabilities {
    double both_1;
    double both_2;
    double split;
    double sum() const { return both_1 + both_2 + split; }
};
SectorProbabilities sector_probabilities(const TwoPhotonInput& input, const JcParams& params,
                                         CorrMethod method = CorrMethod::Residue);

} // namespace jchom
