#include "jchom/params.hpp"
#include "jchom/quadrature.hpp"

#include <doctest.h>

using namespace jchom;

namespace {

// Int dnu |f|^2 through nu = nu0 + (xi/2) tan(u), exact finite-interval map.
double packet_norm_integral(const LorentzianPacket& p)
{
    auto f = [&](double u) {
        const double c = std::cos(u);
        const double nu = p.nu0 + 0.5 * p.xi * std::tan(u);
        return std::norm(packet_amplitude(nu, p)) * 0.5 * p.xi / (c * c);
    };
    const double half = 0.5 * pi - 1e-10;
    const std::vector<double> pts{-half, -0.5, 0.0, 0.5, half};
    return integrate(f, pts).value;
}

} // namespace

TEST_CASE("packet amplitude normalization")
{
    for (auto [nu0, xi] : {std::pair{1.0, 0.01}, {0.0, 0.37}, {-4.2, 2.0}, {100.0, 0.001}}) {
        LorentzianPacket p{nu0, xi, 0.3};
        CHECK(std::abs(packet_norm_integral(p) - 1.0) < 1e-8);
    }
}

TEST_CASE("packet amplitude peak value and arrival phase")
{
    LorentzianPacket p{2.0, 0.05, 0.0};
    // |f(nu0)|^2 = (xi/2pi)/(xi^2/4) = 2/(pi xi)
    CHECK(std::norm(packet_amplitude(p.nu0, p)) == doctest::Approx(2.0 / (pi * p.xi)).epsilon(1e-12));

    // shifting the arrival time only rotates the phase
    LorentzianPacket shifted = p;
    shifted.t_arr = 1.7;
    for (double nu : {1.0, 2.0, 2.6}) {
        const complex a = packet_amplitude(nu, p);
        const complex b = packet_amplitude(nu, shifted);
        CHECK(std::abs(std::abs(a) - std::abs(b)) < 1e-15);
        CHECK(std::abs(b - a * std::exp(complex(0.0, nu * 1.7))) < 1e-12);
    }
}

TEST_CASE("packet overlap")
{
    LorentzianPacket p{1.0, 0.04, 0.0};
    CHECK(std::abs(packet_overlap(p, p) - 1.0) < 1e-13);

    // far-detuned packets barely overlap
    LorentzianPacket q{3.0, 0.04, 0.0};
    CHECK(std::abs(packet_overlap(p, q)) < 0.05);

    // long delay suppresses the overlap of identical shapes
    LorentzianPacket late = p;
    late.t_arr = 300.0 / p.xi;
    CHECK(std::abs(packet_overlap(late, p)) < 1e-10);
    // and the overlap is conjugated under swapping
    LorentzianPacket r{1.02, 0.05, 12.0};
    const complex ov = packet_overlap(p, r);
    const complex vo = packet_overlap(r, p);
    CHECK(std::abs(ov - std::conj(vo)) < 1e-13);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(make_params(0.0, 0.0, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_params(0.0, 0.0, 1.0, -1.0), std::invalid_argument);
    const LorentzianPacket zero_width{0.0, 0.0, 0.0};
    CHECK_THROWS_AS(zero_width.validate(), std::invalid_argument);

    const JcParams p = make_params(5.0, 3.0, 1.0, 0.1);
    CHECK(p.delta() == 2.0);
    CHECK(p.g_w() == doctest::Approx(std::sqrt(0.1 / (2.0 * pi))));
}
