#include "jchom/amplitudes.hpp"

#include <doctest.h>

#include <random>

using namespace jchom;

namespace {

JcParams test_params() { return {0.0, -2.0, 1.0, 0.1}; }

TwoPhotonInput test_input(double dt = 0.0)
{
    const JcParams p = test_params();
    const double nu0 = beam_splitter_energies(p).first_upper;
    return {{nu0, 0.01, dt}, {nu0 + 0.003, 0.012, 0.0}, PortConfig::DifferentWaveguides};
}

} // namespace

TEST_CASE("pole form reproduces the pointwise amplitude")
{
    const JcParams p = test_params();
    for (double dt : {0.0, 37.0, -120.0}) {
        const TwoPhotonInput in = test_input(dt);
        TwoPhotonAmplitude ctx(in, p);
        REQUIRE(ctx.residue_usable());
        for (PortPair pair : {PortPair::P12, PortPair::P11, PortPair::P22}) {
            for (double E : {2.0 * in.packet1.nu0, 2.0 * in.packet1.nu0 + 0.004, 1.7}) {
                const PoleForm form = ctx.anti_diagonal(pair, E);
                for (double x : {0.0, 0.002, -0.31, 2.4}) {
                    const complex direct = ctx.amp(pair, 0.5 * E + x, 0.5 * E - x);
                    const complex via_form = form.eval(x);
                    CHECK(std::abs(direct - via_form) <= 1e-10 * std::abs(direct));
                }
            }
        }
    }
}

TEST_CASE("pole form Fourier transform matches quadrature")
{
    const JcParams p = test_params();
    const TwoPhotonInput in = test_input(25.0);
    TwoPhotonAmplitude ctx(in, p);
    const double E = 2.0 * in.packet1.nu0 + 0.002;
    const PoleForm form = ctx.anti_diagonal(PortPair::P12, E);

    QuadOptions opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-10;
    const auto pts = ctx.delta_breakpoints(E);
    for (double tau : {0.0, 0.9, -14.0, 60.0}) {
        auto f = [&](double x) { return std::exp(complex(0.0, x * tau)) * form.eval(x); };
        const complex numeric = integrate_complex(f, pts, opt).value;
        const complex closed = form.fourier(tau);
        CHECK(std::abs(numeric - closed) <= 2e-6 * std::abs(closed) + 1e-10);
    }
}

TEST_CASE("pole form |A|^2 integral matches quadrature")
{
    const JcParams p = test_params();
    for (double dt : {0.0, 18.0}) {
        const TwoPhotonInput in = test_input(dt);
        TwoPhotonAmplitude ctx(in, p);
        for (double E : {2.0 * in.packet1.nu0, 2.0 * in.packet1.nu0 + 0.015}) {
            const PoleForm form = ctx.anti_diagonal(PortPair::P12, E);
            auto f = [&](double x) { return std::norm(form.eval(x)); };
            QuadOptions opt;
            opt.abs_tol = 1e-13;
            opt.rel_tol = 1e-10;
            const double numeric = integrate(f, ctx.delta_breakpoints(E), opt).value;
            const double closed = form.abs2_integral();
            CHECK(std::abs(numeric - closed) <= 1e-8 * closed);
        }
    }
}

TEST_CASE("pole part builder rejects bad inputs")
{
    const std::vector<complex> roots{{0.0, 0.0}};
    const std::vector<complex> poles{{0.0, -1.0}, {0.5, -1.0}};
    CHECK_THROWS_AS(pole_part(1.0, 0.0, roots, poles), std::invalid_argument);

    const std::vector<complex> twice{{0.2, -1.0}, {0.2, -1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(pole_part(1.0, 0.0, {}, twice), degenerate_pole_error);
}

TEST_CASE("pole part residues sum to zero")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        std::vector<complex> poles;
        for (int k = 0; k < 5; ++k)
            poles.push_back({3.0 * u(rng), u(rng) > 0 ? 0.5 + u(rng) * 0.3 : -0.5 - u(rng) * 0.3});
        std::vector<complex> roots{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        const PolePart part = pole_part(complex(u(rng), u(rng)), 0.0, roots, poles);
        complex sum{};
        double scale = 0.0;
        for (std::size_t k = 0; k < part.residues.size(); ++k) {
            sum += part.residues[k];
            scale = std::max(scale, std::abs(part.residues[k]));
        }
        CHECK(std::abs(sum) <= 1e-12 * scale);
    }
}
