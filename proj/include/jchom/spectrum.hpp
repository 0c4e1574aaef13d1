#pragma once

#include "jchom/params.hpp"

#include <array>

namespace jchom {

enum class Branch : int { Lower = -1, Upper = +1 };

/// Jaynes-Cummings ladder energy
///   eps_{n,sigma} = n omega_c - delta/2 + sigma sqrt((delta/2)^2 + n g^2),
/// n >= 1 (the ground state energy is 0 by convention and is rejected here).
double jc_energy(int n, Branch sigma, const JcParams& p);

/// Ladder energy with the cavity line complex-shifted, omega_c -> omega_c - i kappa
/// (and hence delta -> delta - i kappa). The square-root branch is tracked by
/// continuity in delta from the cavity-like assignment at delta >> g, so the
/// kappa -> 0 limit recovers jc_energy on both branches.
complex jc_energy_shifted(int n, Branch sigma, const JcParams& p);

/// Polariton mixing angle theta_n in (0, pi) with tan(theta_n) = -2 g sqrt(n)/delta.
/// theta_n -> pi as delta -> +inf, theta_n -> 0 as delta -> -inf, pi/2 at delta = 0.
double mixing_angle(int n, const JcParams& p);

/// The four single-photon energies where the scatterer acts as a 50/50 beam
/// splitter, |t|^2 = |r|^2 = 1/2:
///   Omega^{(1,2)}_sigma = 1/2 (omega_c + omega_q +- kappa
///                              + sigma sqrt((delta +- kappa)^2 + 4 g^2)),
/// with the +- of the kappa shift paired between both occurrences.
struct BeamSplitterEnergies {
    double first_upper;  // +kappa pairing, sigma = +
    double first_lower;  // +kappa pairing, sigma = -
    double second_upper; // -kappa pairing, sigma = +
    double second_lower; // -kappa pairing, sigma = -

    std::array<double, 4> all() const
    {
        return {first_upper, first_lower, second_upper, second_lower};
    }
};

BeamSplitterEnergies beam_splitter_energies(const JcParams& p);

} // namespace jchom
