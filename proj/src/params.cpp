#include "jchom/params.hpp"

#include <cmath>
#include <stdexcept>

namespace jchom {

void JcParams::validate() const
{
    if (!(g > 0.0)) throw std::invalid_argument("JcParams: coupling g must be > 0");
    if (!(kappa > 0.0)) throw std::invalid_argument("JcParams: decay kappa must be > 0");
    if (!std::isfinite(omega_c) || !std::isfinite(omega_q))
        throw std::invalid_argument("JcParams: frequencies must be finite");
}

JcParams make_params(double omega_c, double omega_q, double g, double kappa)
{
    JcParams p{omega_c, omega_q, g, kappa};
    p.validate();
    return p;
}

void LorentzianPacket::validate() const
{
    if (!(xi > 0.0)) throw std::invalid_argument("LorentzianPacket: width xi must be > 0");
    if (!std::isfinite(nu0) || !std::isfinite(t_arr))
        throw std::invalid_argument("LorentzianPacket: fields must be finite");
}

bool TwoPhotonInput::identical_packets() const
{
    return packet1.nu0 == packet2.nu0 && packet1.xi == packet2.xi;
}

void TwoPhotonInput::validate() const
{
    packet1.validate();
    packet2.validate();
}

complex packet_amplitude(double nu, const LorentzianPacket& p, double t_ref)
{
    const double s = std::sqrt(p.xi / (2.0 * pi));
    const complex phase = std::exp(complex(0.0, -nu * (t_ref - p.t_arr)));
    return s * phase / complex(nu - p.nu0, 0.5 * p.xi);
}

complex packet_overlap(const LorentzianPacket& p1, const LorentzianPacket& p2)
{
    // Int dnu conj(f1) f2 closed by one residue; the contour side follows the
    // sign of the delay in the phase e^{-i nu (t1 - t2)}.
    const double dt = p1.t_arr - p2.t_arr;
    const double s = std::sqrt(p1.xi * p2.xi) / (2.0 * pi);
    const complex up(p1.nu0, 0.5 * p1.xi);   // conj(f1) pole, upper half-plane
    const complex low(p2.nu0, -0.5 * p2.xi); // f2 pole, lower half-plane
    if (dt >= 0.0)
        return -2.0 * pi * ii * s * std::exp(-ii * low * dt) / (low - up);
    return 2.0 * pi * ii * s * std::exp(-ii * up * dt) / (up - low);
}

} // namespace jchom
