#pragma once

#include "spincat/spinspace.hpp"

namespace spincat {

/// Parameters of a two-component spin coherent superposition: |eta> and
/// |-eta> with relative phase theta.
struct SscsParams {
    int twice_j = 0;
    Complex eta;
    double theta = 0.0;
};

/// xi = (1 - |eta|^2) / (1 + |eta|^2), always in (-1, 1].
double xi_param(Complex eta);

/// Normalization denominator 2 + 2 cos(theta) xi^{2j}. The superposition is
/// undefined when this collapses (theta -> pi with eta -> 0).
double sscs_norm_denominator(const SscsParams& params);

/// Throws DegenerateSuperpositionError if the superposition is undefined.
void validate_sscs(const SscsParams& params);

/// Spin coherent state with binomial amplitudes eta^n sqrt(C(2j,n)).
/// Amplitudes are assembled in log-magnitude + phase form so large j and
/// large |eta| cannot overflow.
SpinState scs(const SpinSpace& space, Complex eta);

/// The superposition (|eta> + e^{i theta} |-eta>) / sqrt(2 + 2 cos(theta) xi^{2j}).
/// theta = 0 leaves support on even n only, theta = pi on odd n only (exact).
SpinState sscs(const SpinSpace& space, const SscsParams& params);

/// <eta|-eta> = xi^{2j}.
double scs_overlap_minus(const SpinSpace& space, Complex eta);

/// <eta,theta | eta,theta+pi> = -i sin(theta) xi^{2j} / sqrt(1 - cos^2(theta) xi^{4j}).
Complex sscs_cross_overlap(const SscsParams& params);

/// Evolution under the quadratic number Hamiltonian: amplitude(n) picks up
/// exp(-i chi_t n^2). At chi_t = pi/2 this turns a coherent state into the
/// theta = pi/2 superposition up to a global phase.
SpinState one_axis_twist(const SpinState& state, double chi_t);

/// |<s1|s2>|, insensitive to global phases of either state.
double global_phase_fidelity(const SpinState& s1, const SpinState& s2);

}  // namespace spincat
