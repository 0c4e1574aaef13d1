#include "jchom/scattering.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace jchom;

namespace {

// Independent re-implementation of the reduced T-matrix element in extended
// precision, factored differently (ladder energies from the quadratic-root
// pair rather than the explicit two-branch formula).
using lcomplex = std::complex<long double>;

void ladder_pair(int n, long double omega_c, long double omega_q, long double g,
                 long double kappa, lcomplex& upper, lcomplex& lower)
{
    // roots of e^2 - (sum) e + prod for the n-excitation pair
    const lcomplex omega_ct(omega_c, -kappa);
    const lcomplex delta_t = omega_ct - omega_q;
    const lcomplex sum = 2.0L * (long double)(n)*omega_ct - delta_t;
    const lcomplex w = std::sqrt(0.25L * delta_t * delta_t + (long double)(n)*g * g);
    upper = 0.5L * sum + w;
    lower = 0.5L * sum - w;
}

lcomplex t2_reference(lcomplex nu1p, lcomplex nu1, lcomplex nu2, long double omega_c,
                      long double omega_q, long double g, long double kappa)
{
    lcomplex e1u, e1l, e2u, e2l;
    ladder_pair(1, omega_c, omega_q, g, kappa, e1u, e1l);
    ladder_pair(2, omega_c, omega_q, g, kappa, e2u, e2l);
    const lcomplex E = nu1 + nu2;
    const lcomplex nu2p = E - nu1p;
    const long double pref = kappa * kappa * g * g * g * g / 3.14159265358979323846264338327950288L;
    lcomplex val = pref * (E - e1u - e1l) * (E - 2.0L * e1u) * (E - 2.0L * e1l);
    val /= (E - e2u) * (E - e2l);
    for (const lcomplex& e : {e1u, e1l})
        val /= (nu1p - e) * (nu2p - e) * (nu1 - e) * (nu2 - e);
    return val;
}

} // namespace

TEST_CASE("reflection amplitude zeros and limits")
{
    for (double delta : {-2.0, 0.0, 2.0}) {
        JcParams p{0.0, -delta, 1.0, 0.1};
        for (Branch b : {Branch::Upper, Branch::Lower})
            CHECK(std::abs(reflection_amp(jc_energy(1, b, p), p)) < 1e-10);
        // total reflection at the bare qubit frequency
        CHECK(std::abs(reflection_amp(p.omega_q, p) - 1.0) < 1e-12);
        // and far off resonance
        CHECK(std::abs(reflection_amp(1e7, p) - 1.0) < 1e-5);
        CHECK(std::abs(reflection_amp(-1e7, p) - 1.0) < 1e-5);
    }
    // empty-cavity limit: transparent on cavity resonance
    JcParams empty{0.0, -2.0, 1e-9, 0.1};
    CHECK(std::abs(reflection_amp(0.0, empty)) < 1e-8);
}

TEST_CASE("transmission amplitude zeros and peaks")
{
    for (double delta : {-2.0, 0.0, 2.0}) {
        JcParams p{0.0, -delta, 1.0, 0.1};
        CHECK(std::abs(transmission_amp(p.omega_q, p)) < 1e-10);
        for (Branch b : {Branch::Upper, Branch::Lower})
            CHECK(std::abs(std::norm(transmission_amp(jc_energy(1, b, p), p)) - 1.0) < 1e-10);
        // cross-check against the 50/50 energies
        const double om = beam_splitter_energies(p).first_upper;
        CHECK(std::abs(std::norm(transmission_amp(om, p)) - 0.5) < 1e-10);
    }
}

TEST_CASE("unitarity over random draws")
{
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        JcParams p{0.0, 5.0 * u(rng), 0.1 + 2.0 * std::abs(u(rng)), 0.01 + 2.0 * std::abs(u(rng))};
        const double nu = 12.0 * u(rng);
        const SingleAmps a = single_amps(nu, p);
        worst = std::max(worst, std::abs(std::norm(a.r) + std::norm(a.t) - 1.0));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("even-mode amplitude")
{
    for (double delta : {-2.0, 0.0, 2.0}) {
        JcParams p{0.0, -delta, 1.0, 0.1};
        double worst_mod = 0.0, worst_r = 0.0, worst_t = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double nu = -6.0 + 12.0 * i / 999.0;
            const SingleAmps a = single_amps(nu, p);
            worst_mod = std::max(worst_mod, std::abs(std::abs(a.s_e) - 1.0));
            worst_r = std::max(worst_r, std::abs(0.5 * (a.s_e + 1.0) - a.r));
            worst_t = std::max(worst_t, std::abs(0.5 * (a.s_e - 1.0) - a.t));
        }
        CHECK(worst_mod < 1e-12);
        CHECK(worst_r < 1e-12);
        CHECK(worst_t < 1e-12);
        CHECK(std::abs(even_mode_amp(1e8, p) - 1.0) < 1e-6);
    }
}

TEST_CASE("reduced T-matrix element symmetries")
{
    JcParams p{0.0, -0.7, 1.0, 0.25};
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        const double n1 = u(rng), n2 = u(rng), n1p = u(rng);
        const complex a = t2_reduced(n1p, n1, n2, p);
        const complex b = t2_reduced(n1p, n2, n1, p);
        CHECK(std::abs(a - b) <= 1e-14 * std::abs(a));
        // swapping the outgoing pair maps nu1p -> nu2p
        const complex c = t2_reduced(n1 + n2 - n1p, n1, n2, p);
        CHECK(std::abs(a - c) <= 1e-12 * std::abs(a));
    }
}

TEST_CASE("reduced T-matrix element vanishes with the coupling")
{
    double prev = 1e300;
    for (double g : {0.3, 0.1, 0.03, 0.01}) {
        JcParams p{0.0, 0.0, g, 0.1};
        const double mag = std::abs(t2_reduced(0.1, 0.05, -0.02, p));
        CHECK(mag < prev);
        prev = mag;
    }
    CHECK(prev < 1e-6); // ~ g^4
}

TEST_CASE("reduced T-matrix numerator zeros at the complex pair energies")
{
    JcParams p{0.0, -0.5, 1.0, 0.1};
    for (Branch b : {Branch::Upper, Branch::Lower}) {
        const complex e2 = 2.0 * jc_energy_shifted(1, b, p);
        // complex-continue nu1 so that nu1 + nu2 = 2 eps~_{1,b}
        const complex nu2(0.3, 0.0);
        const complex at_zero = t2_reduced(0.1, e2 - nu2, nu2, p);
        const complex nearby = t2_reduced(0.1, e2 - nu2 + 0.05, nu2, p);
        CHECK(std::abs(at_zero) < 1e-10 * std::abs(nearby));
    }
}

TEST_CASE("reduced T-matrix element against frozen high-precision values")
{
    // 50-digit evaluations of the same rational expression
    {
        JcParams p{1.0, 1.0, 1.0, 0.1};
        const complex frozen(0.0, 6.30316606304536087519042e-4);
        const complex got = t2_reduced(1.0, 1.0, 1.0, p);
        CHECK(std::abs(got - frozen) <= 1e-12 * std::abs(frozen));
    }
    {
        JcParams p{1.0, 0.5, 1.0, 0.1};
        const complex frozen(9.462128504810895014675263e-3, 5.455330202129906998494675e-3);
        const complex got = t2_reduced(1.25, 1.5, 0.75, p);
        CHECK(std::abs(got - frozen) <= 1e-12 * std::abs(frozen));
    }
    // value is invariant under a global frequency shift
    {
        JcParams p{0.0, 0.0, 1.0, 0.1};
        const complex got = t2_reduced(0.0, 0.0, 0.0, p);
        CHECK(std::abs(got - complex(0.0, 6.30316606304536087519042e-4))
              <= 1e-12 * std::abs(got));
    }
}

TEST_CASE("reduced T-matrix element against the extended-precision rewrite")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 40; ++i) {
        JcParams p{0.0, u(rng), 0.5 + std::abs(u(rng)), 0.05 + 0.2 * std::abs(u(rng))};
        const double n1 = u(rng), n2 = u(rng), n1p = u(rng);
        const complex got = t2_reduced(n1p, n1, n2, p);
        const lcomplex ref = t2_reference(n1p, n1, n2, p.omega_c, p.omega_q, p.g, p.kappa);
        const double rel = std::abs(got - complex(double(ref.real()), double(ref.imag())))
                         / std::abs(got);
        CHECK(rel < 1e-12);
    }
}
