// Acceptance suite: every release criterion as one pass/fail line, with the
// measured numbers alongside. Exit code = number of failed criteria.

#include "jchom/correlations.hpp"
#include "jchom/hom.hpp"
#include "jchom/limits.hpp"
#include "jchom/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace jchom;

namespace {

int g_failed = 0;

void criterion(int id, const char* title, bool pass, const std::string& detail)
{
    std::printf("%s  criterion %2d  %-38s %s\n", pass ? "PASS" : "FAIL", id, title,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failed;
}

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

double elapsed_s(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

TwoPhotonInput two_photons(double nu0, double xi, double dt = 0.0,
                           PortConfig ports = PortConfig::DifferentWaveguides)
{
    return {{nu0, xi, dt}, {nu0, xi, 0.0}, ports};
}

// 1. single-photon unitarity over 1e4 random draws, under one second
void c1_unitarity()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        JcParams p{0.0, 5.0 * u(rng), 0.2 + 2.0 * std::abs(u(rng)),
                   0.01 + 2.5 * std::abs(u(rng))};
        const double nu = 15.0 * u(rng);
        const SingleAmps a = single_amps(nu, p);
        worst = std::max(worst, std::abs(std::norm(a.r) + std::norm(a.t) - 1.0));
    }
    const double dt = elapsed_s(t0);
    criterion(1, "unitarity |r|^2+|t|^2 = 1", worst < 1e-12 && dt < 1.0,
              "worst " + num(worst) + ", " + num(dt) + " s");
}

// 2. reflection zeros at the one-excitation energies, transmission zero at
// the bare qubit frequency
void c2_resonance_zeros()
{
    double worst = 0.0;
    for (double delta : {-2.0, 0.0, 2.0}) {
        const JcParams p{0.0, -delta, 1.0, 0.1};
        for (Branch b : {Branch::Upper, Branch::Lower})
            worst = std::max(worst, std::abs(reflection_amp(jc_energy(1, b, p), p)));
        worst = std::max(worst, std::abs(transmission_amp(p.omega_q, p)));
    }
    criterion(2, "resonance zeros of r and t", worst < 1e-10, "worst " + num(worst));
}

// 3. the four beam-splitter energies give |t|^2 = 1/2
void c3_beam_splitter()
{
    double worst = 0.0;
    for (double delta : {-2.0, 0.0, 2.0}) {
        const JcParams p{0.0, -delta, 1.0, 0.1};
        for (double om : beam_splitter_energies(p).all())
            worst = std::max(worst, std::abs(std::norm(transmission_amp(om, p)) - 0.5));
    }
    criterion(3, "50/50 condition at the four energies", worst < 1e-10, "worst " + num(worst));
}

// 4. sharp-packet linear zero and the finite-width convergence toward it
void c4_linear_hom_zero()
{
    const auto t0 = std::chrono::steady_clock::now();
    const JcParams p{0.0, -2.0, 1.0, 0.1};
    const double om = beam_splitter_energies(p).first_upper;
    const double closed = hom_gamma_linear(om, p);

    bool monotone = true;
    double prev = 1e300;
    std::string gaps;
    for (double xik : {0.1, 0.03, 0.01}) {
        const double gamma = hom_gamma(two_photons(om, xik * p.kappa), p, HomMethod::Linear).gamma;
        const double gap = std::abs(gamma - closed);
        monotone = monotone && gap < prev;
        prev = gap;
        gaps += (gaps.empty() ? "" : " > ") + num(gap);
    }
    const double dt = elapsed_s(t0);
    criterion(4, "linear HOM zero and xi -> 0 gap", closed < 1e-12 && monotone && dt < 60.0,
              "closed " + num(closed) + ", gaps " + gaps);
}

// 5. dispersive HOM dip depth and the two minima loci
void c5_dispersive_dip()
{
    const JcParams p{0.0, -2.0, 1.0, 0.1};
    const auto om = beam_splitter_energies(p);
    const double gamma_dip = hom_gamma(two_photons(om.first_upper, 0.01), p).gamma;

    const double step = 0.005; // kappa/20
    const double lo = 0.5, hi = 1.2;
    std::vector<double> e0s, gs;
    for (double e0 = lo; e0 <= hi + 1e-12; e0 += step) {
        e0s.push_back(e0);
        gs.push_back(hom_gamma(two_photons(0.5 * e0, 0.01), p).gamma);
    }
    std::vector<double> minima;
    for (std::size_t i = 1; i + 1 < gs.size(); ++i)
        if (gs[i] < gs[i - 1] && gs[i] < gs[i + 1]) minima.push_back(e0s[i]);

    bool loci_ok = minima.size() == 2;
    const double target_a = 2.0 * om.second_upper, target_b = 2.0 * om.first_upper;
    if (loci_ok)
        loci_ok = std::abs(minima[0] - target_a) <= step + 1e-9
               && std::abs(minima[1] - target_b) <= step + 1e-9;
    criterion(5, "dispersive HOM dip and minima loci", gamma_dip < 0.1 && loci_ok,
              "gamma " + num(gamma_dip) + ", minima " + std::to_string(minima.size()));
}

// 6. dipole-induced transparency keeps the photons split
void c6_transparency_point()
{
    const JcParams p{0.0, -2.0, 1.0, 0.1};
    const double e1 = jc_energy(1, Branch::Upper, p);
    const double gamma = hom_gamma(two_photons(e1, 0.01), p).gamma;
    criterion(6, "transparency point gamma in [0.9, 1]", gamma >= 0.9 && gamma <= 1.0 + 1e-9,
              "gamma " + num(gamma));
}

// 7. time-integrated correlation sum rules at ten parameter points
void c7_sum_rules()
{
    const auto t0 = std::chrono::steady_clock::now();
    struct Point {
        double delta;
        double carrier_offset; // relative to Omega^{(1)}_+
        double xi_over_kappa;
        double dt;
    };
    const std::vector<Point> points = {
        {2.0, 0.0, 0.1, 0.0},  {2.0, 0.05, 0.1, 0.0},   {0.0, 0.0, 0.1, 0.0},
        {0.5, 0.0, 0.1, 0.0},  {-2.0, 0.0, 0.1, 0.0},   {10.0, 0.0, 0.1, 0.0},
        {2.0, -0.08, 0.2, 0.0}, {0.0, 0.1, 0.1, 0.0},   {2.0, 0.0, 0.1, 50.0},
        {0.5, 0.02, 0.15, 30.0}};
    double worst_cross = 0.0, worst_auto = 0.0;
    for (const Point& pt : points) {
        const JcParams p{0.0, -pt.delta, 1.0, 0.1};
        const double nu0 = beam_splitter_energies(p).first_upper + pt.carrier_offset;
        const TwoPhotonInput in = two_photons(nu0, pt.xi_over_kappa * p.kappa, pt.dt);

        TraceOptions topt;
        topt.normalized = false;
        const CorrelationTrace cross = correlation_trace(PortPair::P12, in, p, topt);
        const double gamma = hom_gamma(in, p).gamma;
        worst_cross = std::max(worst_cross, std::abs(cross.integral - gamma));

        const CorrelationTrace autoc = correlation_trace(PortPair::P11, in, p, topt);
        TwoPhotonAmplitude ctx(in, p);
        QuadOptions qopt;
        qopt.abs_tol = 1e-10;
        qopt.rel_tol = 1e-8;
        const double pair_11 =
            integral_abs2(ctx, PortPair::P11, true, true, CorrMethod::Residue, qopt, nullptr);
        worst_auto = std::max(worst_auto, std::abs(autoc.integral - pair_11));
    }
    const double dt = elapsed_s(t0);
    criterion(7, "sum rules for G2_12 and G2_11", worst_cross < 1e-4 && worst_auto < 1e-4 && dt < 600.0,
              "worst " + num(worst_cross) + " / " + num(worst_auto) + ", " + num(dt) + " s");
}

// 8. symmetric-case moment identities
void c8_moments()
{
    double worst_second = 0.0, worst_var = -1e300;
    for (double delta : {0.0, 0.5, 2.0, 10.0}) {
        const JcParams p{0.0, -delta, 1.0, 0.1};
        for (double off : {0.0, 0.05}) {
            const double nu0 = beam_splitter_energies(p).first_upper + off;
            const TwoPhotonInput in = two_photons(nu0, 0.01);
            const PhotonMoments m = photon_number_moments(in, p);
            const double gamma = hom_gamma(in, p).gamma;
            worst_second = std::max(worst_second, std::abs(m.n1_sq - (2.0 - gamma)));
            worst_var = std::max(worst_var, m.var_n1 - 1.0);
        }
    }
    criterion(8, "moment identities, sub-poissonian bound",
              worst_second < 1e-6 && worst_var <= 1e-9,
              "worst |<n1^2>-(2-gamma)| " + num(worst_second));
}

// 9. side-peak height and the asymptotic envelope
void c9_side_peaks()
{
    const auto t0 = std::chrono::steady_clock::now();
    const JcParams p{0.0, -2.0, 1.0, 0.1};
    const double xi = 0.05 * p.kappa; // xi/kappa = 0.05
    const double dt = 10.0 / xi;
    const double om = beam_splitter_energies(p).first_upper;
    const TwoPhotonInput in = two_photons(om, xi, dt);

    const double norm = g2_norm_constant(PortPair::P12, in, p);
    const double side = g2_raw(PortPair::P12, dt, in, p) / norm;

    // raw trace against the closed form where the envelope is significant
    double worst_rel = 0.0;
    const double peak = 0.125 * xi;
    for (double tau = dt - 3.0 / xi; tau <= dt + 3.0 / xi; tau += 0.25 / xi) {
        const double envelope = g2_cross_asymptotic(tau, dt, xi);
        if (envelope < 0.1 * peak) continue;
        const double raw = g2_raw(PortPair::P12, tau, in, p);
        worst_rel = std::max(worst_rel, std::abs(raw - envelope) / envelope);
    }
    const double secs = elapsed_s(t0);
    criterion(9, "side peak at 1/2 and envelope", std::abs(side - 0.5) < 0.01 && worst_rel < 0.03,
              "side " + num(side) + ", envelope dev " + num(worst_rel) + ", " + num(secs) + " s");
}

// 10. photon-blockade correlations, both input configurations
void c10_blockade()
{
    const JcParams p{0.0, 0.0, 1.0, 0.1};
    const double e1 = jc_energy(1, Branch::Upper, p);

    const TwoPhotonInput split = two_photons(e1, 0.01);
    const double auto_11 = g2_raw(PortPair::P11, 0.0, split, p)
                         / g2_norm_constant_analytic(PortPair::P11, split, p);

    const TwoPhotonInput same = two_photons(e1, 0.01, 0.0, PortConfig::SameWaveguide1);
    const double refl = g2_raw(PortPair::P11, 0.0, same, p)
                      / g2_norm_constant_analytic(PortPair::P11, same, p);
    const double trans = g2_raw(PortPair::P22, 0.0, same, p)
                       / g2_norm_constant_analytic(PortPair::P22, same, p);
    criterion(10, "photon blockade signatures", auto_11 > 2.0 && refl > 1.0 && trans < 1.0,
              "g2_11 " + num(auto_11) + ", same-side refl " + num(refl) + " trans "
                  + num(trans));
}

// 11. dispersive closed forms track the full model and improve with detuning
void c11_dispersive_limits()
{
    const double kappa = 0.1, xi = 0.01;
    auto kerr_dev = [&](double delta) {
        const JcParams p{0.0, -delta, 1.0, kappa};
        const KerrParams kp = dispersive_kerr_params(p);
        double worst = 0.0;
        for (double e0c : {-2.0 * kappa, -kappa, 0.0, kappa, 2.0 * kappa}) {
            const double full =
                hom_gamma(two_photons(kp.omega_bar_c + 0.5 * e0c, xi), p).gamma;
            const double closed = hom_gamma_kerr(e0c, kp.U, kp.kappa, xi);
            worst = std::max(worst, std::abs(full - closed) / std::abs(full));
        }
        return worst;
    };
    auto tls_dev = [&](double delta) {
        const JcParams p{0.0, -delta, 1.0, kappa};
        const TlsParams tp = dispersive_tls_params(p);
        double worst = 0.0;
        for (double e0q : {-2.0 * tp.kappa_bar, 0.0, 2.0 * tp.kappa_bar}) {
            const double full =
                hom_gamma(two_photons(tp.omega_bar_q + 0.5 * e0q, xi), p).gamma;
            const double closed = hom_gamma_tls(e0q, tp.kappa_bar, xi);
            worst = std::max(worst, std::abs(full - closed) / std::abs(full));
        }
        return worst;
    };
    const double kerr_10 = kerr_dev(10.0), kerr_20 = kerr_dev(20.0);
    const double tls_10 = tls_dev(10.0), tls_20 = tls_dev(20.0);
    criterion(11, "dispersive limit equivalence",
              kerr_10 < 0.05 && tls_10 < 0.05 && kerr_20 < kerr_10 && tls_20 < tls_10,
              "kerr " + num(kerr_10) + " -> " + num(kerr_20) + ", tls " + num(tls_10) + " -> "
                  + num(tls_20));
}

// 12. residue-path observables against the independent quadrature oracles
void c12_oracle_equivalence()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    double worst_corr = 0.0;
    for (int i = 0; i < 100; ++i) {
        JcParams p{0.0, 0.0, 1.0, 0.05 + 0.25 * u(rng)};
        p.omega_q = -(6.0 * u(rng) - 3.0);
        const double xi = p.kappa * (0.05 + 0.45 * u(rng));
        const double nu0 = jc_energy(1, Branch::Upper, p) + p.kappa * (2.0 * u(rng) - 1.0);
        TwoPhotonInput in{{nu0, xi, (4.0 * u(rng) - 2.0) / xi},
                          {nu0 + p.kappa * (u(rng) - 0.5), xi, 0.0},
                          PortConfig::DifferentWaveguides};
        const double a = nu0 + p.kappa * (u(rng) - 0.5);
        const double b = nu0 + p.kappa * (u(rng) - 0.5);
        const complex res = out_corr_term(a, b, in, p, CorrMethod::Residue);
        const complex ref = quad_corr_term(a, b, in, p);
        worst_corr = std::max(worst_corr, std::abs(res - ref) / std::abs(ref));
    }

    double worst_gamma = 0.0;
    for (double delta : {2.0, 0.5}) {
        const JcParams p{0.0, -delta, 1.0, 0.1};
        const double om = beam_splitter_energies(p).first_upper;
        const TwoPhotonInput in = two_photons(om, 0.01);
        worst_gamma = std::max(worst_gamma,
                               std::abs(hom_gamma(in, p).gamma - quad_gamma(in, p)));
    }

    double worst_g2 = 0.0;
    {
        std::mt19937 rng2(778);
        for (int i = 0; i < 20; ++i) {
            JcParams p{0.0, -(4.0 * u(rng) - 2.0), 1.0, 0.1};
            (void)rng2;
            const double xi = p.kappa * (0.1 + 0.3 * u(rng));
            const double nu0 = beam_splitter_energies(p).first_upper;
            const TwoPhotonInput in = two_photons(nu0, xi);
            const double tau = (2.0 * u(rng) - 1.0) * 1.5 / xi;
            const double fast = g2_raw(PortPair::P12, tau, in, p);
            const double ref = quad_g2(PortPair::P12, tau, in, p);
            worst_g2 = std::max(worst_g2, std::abs(fast - ref));
        }
    }
    const double secs = elapsed_s(t0);
    criterion(12, "oracle equivalence (C, gamma, G2)",
              worst_corr < 1e-8 && worst_gamma < 1e-5 && worst_g2 < 1e-5 && secs < 1800.0,
              "C " + num(worst_corr) + ", gamma " + num(worst_gamma) + ", G2 " + num(worst_g2)
                  + ", " + num(secs) + " s");
}

} // namespace

int main()
{
    const auto t0 = std::chrono::steady_clock::now();
    c1_unitarity();
    c2_resonance_zeros();
    c3_beam_splitter();
    c4_linear_hom_zero();
    c5_dispersive_dip();
    c6_transparency_point();
    c7_sum_rules();
    c8_moments();
    c9_side_peaks();
    c10_blockade();
    c11_dispersive_limits();
    c12_oracle_equivalence();
    std::printf("%d of 12 criteria passed in %.1f s\n", 12 - g_failed, elapsed_s(t0));
    return g_failed;
}
