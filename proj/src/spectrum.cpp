#include "jchom/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace jchom {

namespace {

void require_excited(int n)
{
    if (n < 1) throw std::invalid_argument("jc_energy: n must be >= 1 (ground state is 0)");
}

} // namespace

double jc_energy(int n, Branch sigma, const JcParams& p)
{
    require_excited(n);
    p.validate();
    const double delta = p.delta();
    const double w = std::sqrt(0.25 * delta * delta + double(n) * p.g * p.g);
    return double(n) * p.omega_c - 0.5 * delta + double(int(sigma)) * w;
}

complex jc_energy_shifted(int n, Branch sigma, const JcParams& p)
{
    require_excited(n);
    p.validate();
    const double delta = p.delta();
    const complex omega_ct(p.omega_c, -p.kappa);
    const complex delta_t(delta, -p.kappa);
    const complex z = 0.25 * delta_t * delta_t + double(n) * p.g * p.g;
    complex w = std::sqrt(z);
    // z crosses the negative real axis only at delta = 0, and only when
    // kappa > 2 g sqrt(n). Flipping the principal root past that crossing
    // keeps the branch that is cavity-like at large positive detuning
    // continuous over the whole delta axis.
    if (delta < 0.0 && p.kappa > 2.0 * p.g * std::sqrt(double(n))) w = -w;
    return double(n) * omega_ct - 0.5 * delta_t + double(int(sigma)) * w;
}

double mixing_angle(int n, const JcParams& p)
{
    require_excited(n);
    p.validate();
    // atan2 with positive first argument lands in (0, pi) and realizes
    // tan(theta) = -2 g sqrt(n)/delta with the required limits.
    return std::atan2(2.0 * p.g * std::sqrt(double(n)), -p.delta());
}

BeamSplitterEnergies beam_splitter_energies(const JcParams& p)
{
    p.validate();
    const double delta = p.delta();
    auto omega = [&](double fam, double sig) {
        const double root = std::sqrt((delta + fam * p.kappa) * (delta + fam * p.kappa)
                                      + 4.0 * p.g * p.g);
        return 0.5 * (p.omega_c + p.omega_q + fam * p.kappa + sig * root);
    };
    return {omega(+1.0, +1.0), omega(+1.0, -1.0), omega(-1.0, +1.0), omega(-1.0, -1.0)};
}

} // namespace jchom
