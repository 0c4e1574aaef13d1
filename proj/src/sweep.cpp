#include "jchom/sweep.hpp"

#include "jchom/scattering.hpp"

#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace jchom {

namespace {

using nlohmann::json;

const std::map<std::string, Observable>& observable_table()
{
    static const std::map<std::string, Observable> table = {
        {"gamma", Observable::Gamma},
        {"gamma_lin", Observable::GammaLin},
        {"g2_12", Observable::G2Cross},
        {"g2_11", Observable::G2Auto1},
        {"g2_11_same_side", Observable::G2SameAuto1},
        {"g2_22_same_side", Observable::G2SameAuto2},
        {"transmission", Observable::Transmission},
    };
    return table;
}

std::string method_name(HomMethod m)
{
    switch (m) {
    case HomMethod::ExactResidue: return "residue";
    case HomMethod::ExactQuadrature: return "quadrature";
    case HomMethod::Linear: return "linear";
    case HomMethod::KerrLimit: return "kerr";
    case HomMethod::TlsLimit: return "tls";
    }
    return "?";
}

HomMethod method_from_name(const std::string& name)
{
    for (HomMethod m : {HomMethod::ExactResidue, HomMethod::ExactQuadrature, HomMethod::Linear,
                        HomMethod::KerrLimit, HomMethod::TlsLimit})
        if (method_name(m) == name) return m;
    throw std::invalid_argument("unknown method: " + name);
}

std::vector<double> axis_values(const AxisSpec& ax)
{
    if (!ax.values.empty()) {
        for (double x : ax.values)
            if (!std::isfinite(x))
                throw std::invalid_argument("axis " + ax.name + ": values must be finite");
        return ax.values;
    }
    if (!(ax.count >= 2)) throw std::invalid_argument("axis " + ax.name + ": count must be >= 2");
    if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi))
        throw std::invalid_argument("axis " + ax.name + ": range must be finite");
    std::vector<double> v(ax.count);
    for (int i = 0; i < ax.count; ++i)
        v[i] = ax.lo + (ax.hi - ax.lo) * double(i) / double(ax.count - 1);
    return v;
}

struct PointSetting {
    double delta;
    double e0;
    double dt;
    double tau;
    double xi;
};

void apply_axis(PointSetting& pt, const std::string& name, double value)
{
    if (name == "delta") pt.delta = value;
    else if (name == "e0") pt.e0 = value;
    else if (name == "dt") pt.dt = value;
    else if (name == "tau") pt.tau = value;
    else if (name == "xi") pt.xi = value;
    else throw std::invalid_argument("unknown axis: " + name);
}

// Norm constants repeat across tau rows; cache per carrier/shape key. The
// defining-limit cross-check runs once per sweep, later hits reuse the
// closed form.
struct NormCache {
    std::mutex mu;
    std::map<std::tuple<int, double, double, double>, double> values;
    std::atomic<bool> verified{false};
};

double cached_norm_constant(NormCache& cache, PortPair pair, const TwoPhotonInput& in,
                            const JcParams& par)
{
    const auto key = std::make_tuple(int(pair) * 2 + int(in.ports == PortConfig::SameWaveguide1),
                                     par.delta(), in.packet1.nu0, in.packet1.xi);
    {
        std::scoped_lock lock(cache.mu);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    TwoPhotonInput aligned = in;
    aligned.packet1.t_arr = aligned.packet2.t_arr = 0.0;
    const double value = cache.verified.exchange(true)
                             ? g2_norm_constant_analytic(pair, aligned, par)
                             : g2_norm_constant(pair, aligned, par);
    std::scoped_lock lock(cache.mu);
    cache.values.emplace(key, value);
    return value;
}

SweepRow evaluate_point(const SweepSpec& spec, const PointSetting& pt, NormCache& norms)
{
    SweepRow row{pt.delta, pt.e0, pt.dt, pt.tau, 0.0, 0.0, "ok", method_name(spec.method)};
    try {
        JcParams par = spec.base;
        par.omega_q = par.omega_c - pt.delta;
        par.validate();

        const double nu0 = par.omega_c + 0.5 * pt.e0;
        TwoPhotonInput in;
        in.packet1 = {nu0, pt.xi, pt.dt};
        in.packet2 = {nu0, pt.xi, 0.0};

        switch (spec.observable) {
        case Observable::Gamma: {
            const HomResult res = hom_gamma(in, par, spec.method);
            row.value = res.gamma;
            row.abs_err = res.error_estimate;
            row.method = method_name(res.method);
            break;
        }
        case Observable::GammaLin: {
            const HomResult res = hom_gamma(in, par, HomMethod::Linear);
            row.value = res.gamma;
            row.abs_err = res.error_estimate;
            row.method = "linear";
            break;
        }
        case Observable::G2Cross:
        case Observable::G2Auto1:
        case Observable::G2SameAuto1:
        case Observable::G2SameAuto2: {
            PortPair pair = PortPair::P12;
            if (spec.observable == Observable::G2Auto1) pair = PortPair::P11;
            if (spec.observable == Observable::G2SameAuto1) pair = PortPair::P11;
            if (spec.observable == Observable::G2SameAuto2) pair = PortPair::P22;
            if (spec.observable == Observable::G2SameAuto1
                || spec.observable == Observable::G2SameAuto2)
                in.ports = PortConfig::SameWaveguide1;
            const CorrMethod cm = spec.method == HomMethod::ExactQuadrature
                                      ? CorrMethod::Quadrature
                                      : CorrMethod::Residue;
            double err = 0.0;
            const double raw = g2_raw(pair, pt.tau, in, par, cm, &err);
            const double norm = cached_norm_constant(norms, pair, in, par);
            row.value = raw / norm;
            row.abs_err = err / norm;
            break;
        }
        case Observable::Transmission: {
            row.value = std::norm(transmission_amp(nu0, par));
            row.method = "analytic";
            break;
        }
        }
    } catch (const std::exception& e) {
        row.value = std::numeric_limits<double>::quiet_NaN();
        row.abs_err = std::numeric_limits<double>::quiet_NaN();
        row.status = e.what();
    }
    return row;
}

} // namespace

Observable observable_from_name(const std::string& name)
{
    const auto& table = observable_table();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown observable: " + name);
    return it->second;
}

std::string observable_name(Observable o)
{
    for (const auto& [k, v] : observable_table())
        if (v == o) return k;
    return "?";
}

void SweepSpec::validate() const
{
    base.validate();
    if (!(xi > 0.0)) throw std::invalid_argument("sweep: xi must be > 0");
    if (axes.size() > 2) throw std::invalid_argument("sweep: at most two axes");
    for (const AxisSpec& ax : axes) (void)axis_values(ax);
    if (units != "g" && units != "absolute")
        throw std::invalid_argument("sweep: units must be 'g' or 'absolute'");
    if (threads < 1) throw std::invalid_argument("sweep: threads must be >= 1");
}

SweepDataset run_sweep(const SweepSpec& raw_spec)
{
    raw_spec.validate();
    SweepSpec spec = raw_spec;
    if (spec.units == "g" && spec.base.g != 1.0) {
        // interpret inputs as raw angular frequencies and express in units of g
        const double g = spec.base.g;
        spec.base.omega_c /= g;
        spec.base.omega_q /= g;
        spec.base.kappa /= g;
        spec.base.g = 1.0;
        spec.xi /= g;
        spec.e0 /= g;
        spec.dt *= g;
        spec.tau *= g;
        for (AxisSpec& ax : spec.axes) {
            const bool time_axis = ax.name == "dt" || ax.name == "tau";
            const double f = time_axis ? g : 1.0 / g;
            ax.lo *= f;
            ax.hi *= f;
            for (double& v : ax.values) v *= f;
        }
    }

    std::vector<std::vector<double>> grids;
    for (const AxisSpec& ax : spec.axes) grids.push_back(axis_values(ax));

    std::size_t total = 1;
    for (const auto& gv : grids) total *= gv.size();

    SweepDataset out;
    out.columns = {"delta", "e0", "dt", "tau", "value", "abs_err", "status", "method"};
    out.rows.resize(total);

    NormCache norms;
    auto point_for_index = [&](std::size_t idx) {
        PointSetting pt{spec.base.delta(), spec.e0, spec.dt, spec.tau, spec.xi};
        if (grids.size() == 1) {
            apply_axis(pt, spec.axes[0].name, grids[0][idx]);
        } else if (grids.size() == 2) {
            const std::size_t inner = grids[1].size();
            apply_axis(pt, spec.axes[0].name, grids[0][idx / inner]);
            apply_axis(pt, spec.axes[1].name, grids[1][idx % inner]);
        }
        return pt;
    };

    const int workers = std::max(1, spec.threads);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            out.rows[idx] = evaluate_point(spec, point_for_index(idx), norms);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return out;
}

std::string format_value(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out;
}

std::string json_number(double x)
{
    if (!std::isfinite(x)) return "null";
    return format_value(x);
}

} // namespace

void emit(const SweepDataset& data, EmitFormat format, const std::string& path)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("emit: cannot open '" + path + "' for writing");

    if (format == EmitFormat::Csv) {
        for (std::size_t i = 0; i < data.columns.size(); ++i)
            file << (i ? "," : "") << data.columns[i];
        file << "\n";
        for (const SweepRow& r : data.rows) {
            file << format_value(r.delta) << ',' << format_value(r.e0) << ','
                 << format_value(r.dt) << ',' << format_value(r.tau) << ','
                 << format_value(r.value) << ',' << format_value(r.abs_err) << ','
                 << csv_quote(r.status) << ',' << csv_quote(r.method) << "\n";
        }
    } else {
        for (const SweepRow& r : data.rows) {
            file << "{\"delta\":" << json_number(r.delta) << ",\"e0\":" << json_number(r.e0)
                 << ",\"dt\":" << json_number(r.dt) << ",\"tau\":" << json_number(r.tau)
                 << ",\"value\":" << json_number(r.value)
                 << ",\"abs_err\":" << json_number(r.abs_err) << ",\"status\":\""
                 << json_escape(r.status) << "\",\"method\":\"" << json_escape(r.method)
                 << "\"}\n";
        }
    }
    if (!file.good()) throw std::runtime_error("emit: write failed for '" + path + "'");
}

SweepSpec sweep_spec_from_json(const std::string& json_text)
{
    const json j = json::parse(json_text);
    SweepSpec spec;
    if (j.contains("params")) {
        const json& p = j["params"];
        spec.base.omega_c = p.value("omega_c", spec.base.omega_c);
        spec.base.omega_q = p.value("omega_q", spec.base.omega_q);
        if (p.contains("delta")) spec.base.omega_q = spec.base.omega_c - p["delta"].get<double>();
        spec.base.g = p.value("g", spec.base.g);
        spec.base.kappa = p.value("kappa", spec.base.kappa);
    }
    if (j.contains("packet")) {
        spec.xi = j["packet"].value("xi", spec.xi);
        spec.dt = j["packet"].value("dt", spec.dt);
    }
    spec.e0 = j.value("e0", spec.e0);
    spec.tau = j.value("tau", spec.tau);
    if (j.contains("axes")) {
        for (const json& a : j["axes"]) {
            AxisSpec ax;
            ax.name = a.at("name").get<std::string>();
            if (a.contains("values")) {
                ax.values = a["values"].get<std::vector<double>>();
            } else {
                ax.lo = a.at("min").get<double>();
                ax.hi = a.at("max").get<double>();
                ax.count = a.at("count").get<int>();
            }
            spec.axes.push_back(ax);
        }
    }
    if (j.contains("observable")) spec.observable = observable_from_name(j["observable"]);
    if (j.contains("method")) spec.method = method_from_name(j["method"]);
    spec.units = j.value("units", spec.units);
    spec.threads = j.value("threads", spec.threads);
    spec.validate();
    return spec;
}

std::string sweep_spec_to_json(const SweepSpec& spec)
{
    json j;
    j["params"] = {{"omega_c", spec.base.omega_c},
                   {"omega_q", spec.base.omega_q},
                   {"g", spec.base.g},
                   {"kappa", spec.base.kappa}};
    j["packet"] = {{"xi", spec.xi}, {"dt", spec.dt}};
    j["e0"] = spec.e0;
    j["tau"] = spec.tau;
    j["axes"] = json::array();
    for (const AxisSpec& ax : spec.axes) {
        if (!ax.values.empty())
            j["axes"].push_back({{"name", ax.name}, {"values", ax.values}});
        else
            j["axes"].push_back({{"name", ax.name}, {"min", ax.lo}, {"max", ax.hi},
                                 {"count", ax.count}});
    }
    j["observable"] = observable_name(spec.observable);
    j["method"] = method_name(spec.method);
    j["units"] = spec.units;
    j["threads"] = spec.threads;
    return j.dump(2);
}

std::map<std::string, SweepSpec> figure_presets()
{
    std::map<std::string, SweepSpec> presets;

    SweepSpec base;
    base.base = {0.0, 0.0, 1.0, 0.1};
    base.xi = 0.01; // xi/kappa = 0.1

    {
        SweepSpec s = base;
        s.observable = Observable::Transmission;
        s.axes = {{"delta", -6.0, 6.0, 121}, {"e0", -14.0, 14.0, 561}};
        presets["fig2b"] = s;
    }
    {
        SweepSpec s = base;
        s.observable = Observable::Gamma;
        s.axes = {{"delta", -4.0, 4.0, 201}, {"e0", -3.0, 3.0, 201}};
        presets["fig3a"] = s;
    }
    {
        SweepSpec s = base;
        s.observable = Observable::Gamma;
        s.e0 = 1.0;
        s.axes = {{"delta", -4.0, 4.0, 401}};
        presets["fig3c"] = s;
    }
    {
        SweepSpec s = base;
        s.observable = Observable::Gamma;
        s.base.omega_q = -2.0; // delta = 2 g
        s.axes = {{"e0", 0.3, 1.5, 481}};
        presets["fig3d"] = s;
    }
    {
        SweepSpec s = base;
        s.observable = Observable::G2Cross;
        s.axes = {{"delta", -4.0, 4.0, 81}, {"e0", -3.0, 3.0, 81}};
        presets["fig4a"] = s;
    }
    {
        SweepSpec s = base;
        s.observable = Observable::G2Cross;
        s.base.omega_q = -2.0;
        s.e0 = 1.0; // 2 Omega^{(1)}_+ at delta = 2
        AxisSpec delays{"dt", 0.0, 0.0, 2, {0.0, 200.0, 500.0, 1000.0}}; // xi*dt = 0, 2, 5, 10
        s.axes = {delays, {"tau", -1600.0, 1600.0, 801}};
        presets["fig4d"] = s;
    }
    {
        SweepSpec s = base;
        s.observable = Observable::G2Auto1;
        s.axes = {{"delta", -4.0, 4.0, 81}, {"e0", -3.0, 3.0, 81}};
        presets["fig5a"] = s;
    }
    {
        SweepSpec s = base;
        s.observable = Observable::G2SameAuto1;
        s.axes = {{"delta", -4.0, 4.0, 81}, {"e0", -3.0, 3.0, 81}};
        presets["fig5c_refl"] = s;
    }
    {
        SweepSpec s = base;
        s.observable = Observable::G2SameAuto2;
        s.axes = {{"delta", -4.0, 4.0, 81}, {"e0", -3.0, 3.0, 81}};
        presets["fig5c_trans"] = s;
    }
    return presets;
}

} // namespace jchom
