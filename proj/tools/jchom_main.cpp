// jchom: two-photon scattering at a Jaynes-Cummings nonlinearity coupled to
// two waveguides. Verbs: sweep, figure, check, oracle.

#include "jchom/correlations.hpp"
#include "jchom/hom.hpp"
#include "jchom/oracle.hpp"
#include "jchom/sweep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace jchom;

int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

void apply_param(SweepSpec& spec, const std::string& kv)
{
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--param expects key=value: " + kv);
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "observable") {
        spec.observable = observable_from_name(val);
        return;
    }
    if (key == "units") {
        spec.units = val;
        return;
    }
    const double x = std::stod(val);
    if (key == "omega_c") spec.base.omega_c = x;
    else if (key == "omega_q") spec.base.omega_q = x;
    else if (key == "delta") spec.base.omega_q = spec.base.omega_c - x;
    else if (key == "g") spec.base.g = x;
    else if (key == "kappa") spec.base.kappa = x;
    else if (key == "xi") spec.xi = x;
    else if (key == "dt") spec.dt = x;
    else if (key == "e0") spec.e0 = x;
    else if (key == "tau") spec.tau = x;
    else throw CLI::ValidationError("unknown --param key: " + key);
}

void apply_axis(SweepSpec& spec, const std::vector<std::string>& axes)
{
    if (axes.empty()) return;
    spec.axes.clear();
    for (const std::string& text : axes) {
        AxisSpec ax;
        std::stringstream ss(text);
        std::string tok;
        std::getline(ss, tok, ':');
        ax.name = tok;
        std::getline(ss, tok, ':');
        if (tok.find(',') != std::string::npos) {
            std::stringstream vs(tok);
            std::string v;
            while (std::getline(vs, v, ',')) ax.values.push_back(std::stod(v));
        } else {
            ax.lo = std::stod(tok);
            std::getline(ss, tok, ':');
            ax.hi = std::stod(tok);
            std::getline(ss, tok, ':');
            ax.count = std::stoi(tok);
        }
        spec.axes.push_back(ax);
    }
}

int run_spec(SweepSpec spec, const std::string& out_path, const std::string& format,
             bool slow_oracles)
{
    const auto t0 = std::chrono::steady_clock::now();
    SweepDataset data = run_sweep(spec);
    const auto t1 = std::chrono::steady_clock::now();

    std::size_t failed = 0;
    for (const auto& r : data.rows)
        if (r.status != "ok") ++failed;

    emit(data, format == "jsonl" ? EmitFormat::JsonLines : EmitFormat::Csv, out_path);
    std::cout << data.rows.size() << " rows -> " << out_path << "  ("
              << std::chrono::duration<double>(t1 - t0).count() << " s";
    if (failed) std::cout << ", " << failed << " failed rows";
    std::cout << ")\n";

    if (slow_oracles && (spec.observable == Observable::Gamma)) {
        // spot-check a few rows against the brute-force reference
        std::cout << "oracle spot checks:\n";
        const std::size_t n = data.rows.size();
        for (std::size_t idx : {std::size_t(0), n / 2, n - 1}) {
            const SweepRow& r = data.rows[idx];
            if (r.status != "ok") continue;
            JcParams par = spec.base;
            par.omega_q = par.omega_c - r.delta;
            const double nu0 = par.omega_c + 0.5 * r.e0;
            TwoPhotonInput in{{nu0, spec.xi, r.dt}, {nu0, spec.xi, 0.0},
                              PortConfig::DifferentWaveguides};
            QuadSpec qs;
            const double ref = quad_gamma(in, par, qs);
            report(std::abs(ref - r.value) < 2e-5, "row " + std::to_string(idx),
                   "gamma=" + fmt(r.value) + " oracle=" + fmt(ref));
        }
    }
    return failed == 0 && g_failures == 0 ? 0 : 1;
}

void verb_check()
{
    // packet normalization through the arctangent substitution
    {
        bool ok = true;
        for (auto [nu0, xi] : {std::pair{1.0, 0.01}, {0.0, 0.5}, {-3.0, 2.0}}) {
            LorentzianPacket p{nu0, xi, 0.7};
            auto f = [&](double u) {
                const double nu = nu0 + 0.5 * xi * std::tan(u);
                const double jac = 0.5 * xi / (std::cos(u) * std::cos(u));
                return std::norm(packet_amplitude(nu, p)) * jac;
            };
            const double half = 0.5 * pi - 1e-9;
            const std::vector<double> pts{-half, 0.0, half};
            const double norm = integrate(f, pts).value;
            ok = ok && std::abs(norm - 1.0) < 1e-8;
        }
        report(ok, "packet normalization", "");
    }
    // single-photon unitarity on random draws
    {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 2000; ++i) {
            JcParams p{0.0, 5.0 * u(rng), 1.0, 0.02 + 2.0 * std::abs(u(rng))};
            const double nu = 10.0 * u(rng);
            const SingleAmps amp = single_amps(nu, p);
            worst = std::max(worst, std::abs(std::norm(amp.r) + std::norm(amp.t) - 1.0));
            worst = std::max(worst, std::abs(std::abs(amp.s_e) - 1.0));
        }
        report(worst < 1e-12, "unitarity |r|^2+|t|^2 = 1", "worst " + fmt(worst));
    }
    // resonance zeros and beam-splitter energies
    {
        double worst_r = 0.0, worst_t = 0.0, worst_bs = 0.0;
        for (double delta : {-2.0, 0.0, 2.0}) {
            JcParams p{0.0, -delta, 1.0, 0.1};
            for (Branch b : {Branch::Upper, Branch::Lower})
                worst_r = std::max(worst_r, std::abs(reflection_amp(jc_energy(1, b, p), p)));
            worst_t = std::max(worst_t, std::abs(transmission_amp(p.omega_q, p)));
            for (double om : beam_splitter_energies(p).all())
                worst_bs = std::max(worst_bs,
                                    std::abs(std::norm(transmission_amp(om, p)) - 0.5));
        }
        report(worst_r < 1e-10, "reflection zeros at eps_1+-", "worst " + fmt(worst_r));
        report(worst_t < 1e-10, "transmission zero at omega_q", "worst " + fmt(worst_t));
        report(worst_bs < 1e-10, "50/50 condition at Omega", "worst " + fmt(worst_bs));
    }
    // residue vs quadrature correlation term
    {
        JcParams p{0.0, 0.0, 1.0, 0.1};
        TwoPhotonInput in{{1.0, 0.01, 0.0}, {1.0, 0.01, 0.0}, PortConfig::DifferentWaveguides};
        const complex a = out_corr_term(1.05, 0.95, in, p, CorrMethod::Residue);
        const complex b = out_corr_term(1.05, 0.95, in, p, CorrMethod::Quadrature);
        const double rel = std::abs(a - b) / std::abs(b);
        report(rel < 1e-8, "correlation term residue vs quadrature", "rel " + fmt(rel));
    }
    // probability conservation
    {
        JcParams p{0.0, -2.0, 1.0, 0.1};
        const double nu0 = beam_splitter_energies(p).first_upper;
        TwoPhotonInput in{{nu0, 0.01, 0.0}, {nu0, 0.01, 0.0}, PortConfig::DifferentWaveguides};
        const SectorProbabilities s = sector_probabilities(in, p);
        report(std::abs(s.sum() - 1.0) < 1e-6, "two-photon probability conservation",
               "sum " + fmt(s.sum()));
    }
}

void verb_oracle(int draws, unsigned seed, bool slow)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    // correlation term, residue vs brute force
    {
        double worst = 0.0;
        for (int i = 0; i < draws; ++i) {
            JcParams p{0.0, 0.0, 1.0, 0.05 + 0.3 * u(rng)};
            p.omega_q = -(u(rng) * 6.0 - 3.0);
            const double xi = p.kappa * (0.05 + 0.45 * u(rng));
            const double nu0 = jc_energy(1, Branch::Upper, p) + p.kappa * (2.0 * u(rng) - 1.0);
            TwoPhotonInput in{{nu0, xi, (2.0 * u(rng) - 1.0) * 2.0 / xi},
                              {nu0 + p.kappa * (u(rng) - 0.5), xi, 0.0},
                              PortConfig::DifferentWaveguides};
            const double a = u(rng) * p.kappa, b = -u(rng) * p.kappa;
            const complex res = out_corr_term(nu0 + a, nu0 + b, in, p, CorrMethod::Residue);
            const complex ref = quad_corr_term(nu0 + a, nu0 + b, in, p);
            worst = std::max(worst, std::abs(res - ref) / std::abs(ref));
        }
        report(worst < 1e-8, "corr term vs oracle (" + std::to_string(draws) + " draws)",
               "worst rel " + fmt(worst));
    }
    // gamma at the published working point
    {
        JcParams p{0.0, -2.0, 1.0, 0.1};
        const double nu0 = beam_splitter_energies(p).first_upper;
        TwoPhotonInput in{{nu0, 0.01, 0.0}, {nu0, 0.01, 0.0}, PortConfig::DifferentWaveguides};
        const double fast = hom_gamma(in, p).gamma;
        const double ref = quad_gamma(in, p);
        report(std::abs(fast - ref) < 1e-5, "gamma vs oracle",
               "gamma=" + fmt(fast) + " oracle=" + fmt(ref));
    }
    // correlation function spot checks
    {
        const int points = slow ? 8 : 3;
        JcParams p{0.0, -2.0, 1.0, 0.1};
        const double nu0 = beam_splitter_energies(p).first_upper;
        TwoPhotonInput in{{nu0, 0.02, 0.0}, {nu0, 0.02, 0.0}, PortConfig::DifferentWaveguides};
        double worst = 0.0;
        for (int i = 0; i < points; ++i) {
            const double tau = (2.0 * u(rng) - 1.0) * 2.0 / 0.02;
            const double fast = g2_raw(PortPair::P12, tau, in, p);
            const double ref = quad_g2(PortPair::P12, tau, in, p);
            worst = std::max(worst, std::abs(fast - ref));
        }
        report(worst < 1e-5, "g2 vs oracle (" + std::to_string(points) + " points)",
               "worst abs " + fmt(worst));
    }
    // cross-correlation sum rule
    {
        JcParams p{0.0, -2.0, 1.0, 0.1};
        const double nu0 = beam_splitter_energies(p).first_upper;
        TwoPhotonInput in{{nu0, 0.01, 0.0}, {nu0, 0.01, 0.0}, PortConfig::DifferentWaveguides};
        TraceOptions topt;
        topt.normalized = false;
        const CorrelationTrace tr = correlation_trace(PortPair::P12, in, p, topt);
        const double gamma = hom_gamma(in, p).gamma;
        report(std::abs(tr.integral - gamma) < 1e-4, "sum rule Int G2_12 = gamma",
               "int=" + fmt(tr.integral) + " gamma=" + fmt(gamma));
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"two-photon scattering at a Jaynes-Cummings nonlinearity"};
    app.require_subcommand(1);

    std::string config_path, preset_name, out_path = "sweep.csv", format = "csv";
    std::vector<std::string> params, axes;
    std::string observable, method;
    int threads = 1;
    bool slow_oracles = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "sweep configuration JSON");
        cmd->add_option("--param", params, "override, key=value (delta, kappa, xi, dt, e0, ...)");
        cmd->add_option("--axis", axes, "axis, name:lo:hi:count or name:v1,v2,...");
        cmd->add_option("--observable", observable, "observable name");
        cmd->add_option("--method", method, "residue|quadrature|linear|kerr|tls");
        cmd->add_option("--out", out_path, "output path");
        cmd->add_option("--format", format, "csv|jsonl")
            ->check(CLI::IsMember({"csv", "jsonl"}));
        cmd->add_option("--threads", threads, "worker count");
        cmd->add_flag("--slow-oracles", slow_oracles, "re-check sample rows against brute force");
    };

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--preset", preset_name, "start from a figure preset");

    CLI::App* figure_cmd = app.add_subcommand("figure", "emit data for a published figure");
    figure_cmd->add_option("preset", preset_name, "preset name (try 'list')")->required();
    add_common(figure_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "run the fast invariant suite");
    (void)check_cmd;

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "run slow brute-force comparisons");
    int draws = 100;
    unsigned seed = 12345;
    oracle_cmd->add_option("--draws", draws, "random draws for the correlation-term check");
    oracle_cmd->add_option("--seed", seed, "random seed");
    oracle_cmd->add_flag("--slow-oracles", slow_oracles, "full-size comparison set");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("check")) {
            verb_check();
            std::cout << (g_failures ? "FAILURES: " + std::to_string(g_failures) : "all checks passed")
                      << "\n";
            return g_failures ? 1 : 0;
        }
        if (app.got_subcommand("oracle")) {
            verb_oracle(draws, seed, slow_oracles);
            std::cout << (g_failures ? "FAILURES: " + std::to_string(g_failures)
                                     : "all oracle comparisons passed")
                      << "\n";
            return g_failures ? 1 : 0;
        }

        SweepSpec spec;
        if (app.got_subcommand("figure") || !preset_name.empty()) {
            const auto presets = figure_presets();
            if (preset_name == "list") {
                for (const auto& [name, ps] : presets)
                    std::cout << name << "  (" << observable_name(ps.observable) << ")\n";
                return 0;
            }
            auto it = presets.find(preset_name);
            if (it == presets.end()) {
                std::cerr << "unknown preset '" << preset_name << "'; try 'figure list'\n";
                return 2;
            }
            spec = it->second;
            if (out_path == "sweep.csv") out_path = preset_name + (format == "jsonl" ? ".jsonl" : ".csv");
        }
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw std::runtime_error("cannot read config: " + config_path);
            std::stringstream ss;
            ss << f.rdbuf();
            spec = sweep_spec_from_json(ss.str());
        }
        for (const std::string& kv : params) apply_param(spec, kv);
        apply_axis(spec, axes);
        if (!observable.empty()) spec.observable = observable_from_name(observable);
        if (!method.empty()) {
            if (method == "residue") spec.method = HomMethod::ExactResidue;
            else if (method == "quadrature") spec.method = HomMethod::ExactQuadrature;
            else if (method == "linear") spec.method = HomMethod::Linear;
            else if (method == "kerr") spec.method = HomMethod::KerrLimit;
            else if (method == "tls") spec.method = HomMethod::TlsLimit;
            else throw std::runtime_error("unknown method: " + method);
        }
        spec.threads = threads;
        return run_spec(spec, out_path, format, slow_oracles);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
