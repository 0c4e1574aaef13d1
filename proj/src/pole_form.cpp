#include "jchom/pole_form.hpp"

#include <algorithm>
#include <cmath>

namespace jchom {

namespace {

constexpr double two_pi = 2.0 * pi;

complex cis(double x) { return {std::cos(x), std::sin(x)}; }

// (e^{i phi u} - e^{i phi w}) / (u - w), stable when u ~ w. Both u and w lie
// in the half-plane where e^{i phi .} decays, so the direct difference is
// safe except for small phi (u - w), where the sinc series takes over.
complex exp_divided_difference(complex u, complex w, double phi)
{
    const complex h = 0.5 * phi * (u - w);
    if (std::abs(h) < 0.5) {
        const complex h2 = h * h;
        // sin(h)/h
        const complex sinc = 1.0 - h2 / 6.0 * (1.0 - h2 / 20.0 * (1.0 - h2 / 42.0));
        return std::exp(ii * 0.5 * phi * (u + w)) * ii * phi * sinc;
    }
    return (std::exp(ii * phi * u) - std::exp(ii * phi * w)) / (u - w);
}

// Int dx e^{i phi x} / ((x - u)(x - w)), x real, u and w strictly complex.
complex pair_integral(complex u, complex w, double phi)
{
    if (phi >= 0.0) {
        const bool up_u = u.imag() > 0.0;
        const bool up_w = w.imag() > 0.0;
        if (up_u && up_w) return two_pi * ii * exp_divided_difference(u, w, phi);
        if (up_u) return two_pi * ii * std::exp(ii * phi * u) / (u - w);
        if (up_w) return two_pi * ii * std::exp(ii * phi * w) / (w - u);
        return {};
    }
    const bool lo_u = u.imag() < 0.0;
    const bool lo_w = w.imag() < 0.0;
    if (lo_u && lo_w) return -two_pi * ii * exp_divided_difference(u, w, phi);
    if (lo_u) return -two_pi * ii * std::exp(ii * phi * u) / (u - w);
    if (lo_w) return -two_pi * ii * std::exp(ii * phi * w) / (w - u);
    return {};
}

} // namespace

complex PoleForm::eval(double x) const
{
    complex v{};
    for (const auto& part : parts) {
        complex s{};
        for (std::size_t k = 0; k < part.poles.size(); ++k)
            s += part.residues[k] / (x - part.poles[k]);
        v += cis(part.phase * x) * s;
    }
    return v;
}

complex PoleForm::fourier(double tau) const
{
    complex v{};
    for (const auto& part : parts) {
        const double s = tau + part.phase;
        if (s >= 0.0) {
            for (std::size_t k = 0; k < part.poles.size(); ++k)
                if (part.poles[k].imag() > 0.0)
                    v += two_pi * ii * part.residues[k] * std::exp(ii * part.poles[k] * s);
        } else {
            for (std::size_t k = 0; k < part.poles.size(); ++k)
                if (part.poles[k].imag() < 0.0)
                    v -= two_pi * ii * part.residues[k] * std::exp(ii * part.poles[k] * s);
        }
    }
    return v;
}

double PoleForm::abs2_integral() const
{
    complex total{};
    for (const auto& px : parts) {
        for (const auto& py : parts) {
            const double phi = px.phase - py.phase;
            for (std::size_t k = 0; k < px.poles.size(); ++k) {
                for (std::size_t j = 0; j < py.poles.size(); ++j) {
                    total += px.residues[k] * std::conj(py.residues[j])
                           * pair_integral(px.poles[k], std::conj(py.poles[j]), phi);
                }
            }
        }
    }
    return total.real();
}

PolePart pole_part(complex coef, double phase, std::span<const complex> roots,
                   std::span<const complex> poles)
{
    if (roots.size() + 2 > poles.size())
        throw std::invalid_argument("pole_part: need at least two more poles than roots");

    double scale = 0.0;
    for (const complex& q : poles) scale = std::max(scale, std::abs(q));
    for (std::size_t k = 0; k < poles.size(); ++k)
        for (std::size_t l = k + 1; l < poles.size(); ++l)
            if (std::abs(poles[k] - poles[l]) < 1e-12 * std::max(scale, 1.0))
                throw degenerate_pole_error("pole_part: coincident poles");

    PolePart part;
    part.phase = phase;
    double res_scale = 0.0;
    std::vector<complex> res(poles.size());
    for (std::size_t k = 0; k < poles.size(); ++k) {
        complex c = coef;
        for (const complex& rt : roots) c *= (poles[k] - rt);
        for (std::size_t l = 0; l < poles.size(); ++l)
            if (l != k) c /= (poles[k] - poles[l]);
        res[k] = c;
        res_scale = std::max(res_scale, std::abs(c));
    }
    for (std::size_t k = 0; k < poles.size(); ++k) {
        if (std::abs(res[k]) <= 1e-14 * res_scale) continue; // cancelled pole
        if (poles[k].imag() == 0.0)
            throw degenerate_pole_error("pole_part: active pole on the real axis");
        part.poles.push_back(poles[k]);
        part.residues.push_back(res[k]);
    }
    return part;
}

} // namespace jchom
