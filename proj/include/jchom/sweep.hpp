#pragma once

#include "jchom/correlations.hpp"
#include "jchom/hom.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jchom {

enum class Observable {
    Gamma,         // HOM coincidence parameter
    GammaLin,      // same, T-matrix contribution dropped
    G2Cross,       // normalized g2_12(tau), different-waveguide input
    G2Auto1,       // normalized g2_11(tau), different-waveguide input
    G2SameAuto1,   // reflected autocorrelation, same-waveguide input
    G2SameAuto2,   // transmitted autocorrelation, same-waveguide input
    Transmission,  // single-photon |t|^2 at nu = omega_c + e0/2
};

Observable observable_from_name(const std::string& name);
std::string observable_name(Observable o);

/// One sweep axis; name is one of delta, e0, dt, tau, xi. A non-empty values
/// list overrides the uniform lo..hi grid.
struct AxisSpec {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int count = 2;
    std::vector<double> values;

    AxisSpec() = default;
    AxisSpec(std::string n, double l, double h, int c, std::vector<double> v = {})
        : name(std::move(n)), lo(l), hi(h), count(c), values(std::move(v))
    {
    }
};

/// Declarative sweep: base parameters in units of g unless units == "absolute",
/// carriers set by the two-photon energy offset (nu01 = nu02 = omega_c + e0/2),
/// up to two axes swept in row-major order (first axis outermost).
struct SweepSpec {
    JcParams base{0.0, 0.0, 1.0, 0.1};
    double xi = 0.01;
    double dt = 0.0;
    double e0 = 0.0;
    double tau = 0.0;
    std::vector<AxisSpec> axes;
    Observable observable = Observable::Gamma;
    HomMethod method = HomMethod::ExactResidue;
    std::string units = "g";
    int threads = 1;

    void validate() const;
};

struct SweepRow {
    double delta;
    double e0;
    double dt;
    double tau;
    double value;
    double abs_err;
    std::string status; // "ok" or the failure reason
    std::string method;
};

struct SweepDataset {
    std::vector<std::string> columns; // fixed: delta,e0,dt,tau,value,abs_err,status,method
    std::vector<SweepRow> rows;
};

/// Runs the sweep; per-point failures land in the row status, never abort the
/// sweep. Deterministic row order (first axis major) and values independent
/// of the worker count.
SweepDataset run_sweep(const SweepSpec& spec);

enum class EmitFormat { Csv, JsonLines };

/// Writes the dataset with 17 significant digits (locale-independent);
/// CSV fields with embedded commas or quotes are quoted RFC-4180 style.
void emit(const SweepDataset& data, EmitFormat format, const std::string& path);

/// Serialize one double with 17 significant digits.
std::string format_value(double x);

SweepSpec sweep_spec_from_json(const std::string& json_text);
std::string sweep_spec_to_json(const SweepSpec& spec);

/// Named parameter presets reproducing the published figure data.
std::map<std::string, SweepSpec> figure_presets();

} // namespace jchom
