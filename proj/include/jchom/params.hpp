#pragma once

#include "jchom/types.hpp"

#include <cmath>

namespace jchom {

/// Scatterer parameters: cavity frequency, qubit frequency, light-matter
/// coupling and total cavity decay into the two lines (kappa = 2 pi g_w^2).
/// The detuning is always derived, never stored.
struct JcParams {
    double omega_c = 0.0;
    double omega_q = 0.0;
    double g = 1.0;
    double kappa = 0.1;

    double delta() const { return omega_c - omega_q; }
    double g_w() const { return std::sqrt(kappa / (2.0 * pi)); }

    /// Throws std::invalid_argument unless g > 0 and kappa > 0.
    void validate() const;
};

/// Validated construction; delta = omega_c - omega_q.
JcParams make_params(double omega_c, double omega_q, double g, double kappa);

/// Single-photon wave packet with a Lorentzian line of width xi around nu0.
/// The front of the packet reaches the scatterer at t_arr; in the time domain
/// the intensity is xi * exp(-xi (t - t_arr)) for t > t_arr.
struct LorentzianPacket {
    double nu0 = 0.0;
    double xi = 0.01;
    double t_arr = 0.0;

    void validate() const; // xi > 0
};

enum class PortConfig {
    DifferentWaveguides, // one packet per waveguide
    SameWaveguide1       // both packets incident from waveguide 1
};

/// Ordered pair of packets plus the input-port assignment.
struct TwoPhotonInput {
    LorentzianPacket packet1;
    LorentzianPacket packet2;
    PortConfig ports = PortConfig::DifferentWaveguides;

    double time_delay() const { return packet1.t_arr - packet2.t_arr; }
    bool identical_packets() const;
    void validate() const;
};

/// Spectral amplitude density of a packet,
///   f(nu) = sqrt(xi/2pi) e^{-i nu (t_ref - t_arr)} / (nu - nu0 + i xi/2).
/// t_ref cancels in every modulus-squared observable and defaults to 0.
complex packet_amplitude(double nu, const LorentzianPacket& p, double t_ref = 0.0);

/// Spectral overlap integral of two packets over the full frequency axis;
/// equals 1 for identical packets.
complex packet_overlap(const LorentzianPacket& p1, const LorentzianPacket& p2);

} // namespace jchom
