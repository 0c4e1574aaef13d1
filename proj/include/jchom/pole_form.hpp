#pragma once

#include "jchom/types.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace jchom {

struct degenerate_pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One phase-tagged group of simple-pole terms,
///   e^{i phase x} sum_k residues[k] / (x - poles[k]).
/// Every pole is strictly off the real axis and the residues sum to zero
/// (guaranteed by the builder), so the Fourier transform is continuous.
struct PolePart {
    double phase = 0.0;
    std::vector<complex> poles;
    std::vector<complex> residues;
};

/// A rational amplitude along one real line, decomposed into partial
/// fractions: A(x) = sum over parts of e^{i phase x} sum_k c_k/(x - p_k).
/// Supports closed-form Fourier transforms and |A|^2 integrals by residues.
struct PoleForm {
    std::vector<PolePart> parts;

    complex eval(double x) const;

    /// Int dx e^{i x tau} A(x), contour closed per the sign of tau + phase.
    complex fourier(double tau) const;

    /// Int dx |A(x)|^2 over the whole real line.
    double abs2_integral() const;
};

/// Partial fractions of  coef * e^{i phase x} prod_j (x - roots[j]) / prod_k (x - poles[k]).
/// Requires simple poles and at least two more poles than roots (so the term
/// decays like 1/x^2 and residues sum to zero). Residues smaller than
/// ~1e-14 of the term scale are dropped (exact numerator/denominator
/// cancellations). Throws degenerate_pole_error when two poles coincide
/// within 1e-12 of the pole spread.
PolePart pole_part(complex coef, double phase, std::span<const complex> roots,
                   std::span<const complex> poles);

} // namespace jchom
