#include "spincat/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "spincat/errors.hpp"
#include "spincat/numeric.hpp"

namespace spincat {

namespace {

constexpr double kDegeneracyEps = 1e-14;

void require_space_matches(const SpinSpace& space, const SscsParams& params) {
    if (space.twice_j() != params.twice_j)
        throw SpaceMismatchError("sscs: params.twice_j does not match the space");
}

// Builds a normalized state from per-n log-magnitudes, phases, and an O(1)
// complex prefactor. Shifting by the largest log keeps exp() in range for
// any 2j <= 200 and any |eta|.
SpinState from_log_amplitudes(const SpinSpace& space, const std::vector<double>& logmag,
                              const std::vector<double>& phase,
                              const std::vector<Complex>& prefactor) {
    const int d = space.dimension();
    double shift = -std::numeric_limits<double>::infinity();
    for (int n = 0; n < d; ++n)
        if (prefactor[n] != Complex(0.0, 0.0)) shift = std::max(shift, logmag[n]);

    std::vector<Complex> amps(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) {
        if (prefactor[n] == Complex(0.0, 0.0)) {
            amps[n] = Complex(0.0, 0.0);
            continue;
        }
        amps[n] = prefactor[n] * std::polar(std::exp(logmag[n] - shift), phase[n]);
    }
    return {space, std::move(amps)};
}

}  // namespace

double xi_param(Complex eta) {
    const double a2 = std::norm(eta);
    return (1.0 - a2) / (1.0 + a2);
}

double sscs_norm_denominator(const SscsParams& params) {
    const auto ph = num::phase_of(params.theta);
    const double xi2j = num::signed_pow(xi_param(params.eta), params.twice_j);
    return 2.0 + 2.0 * ph.c * xi2j;
}

void validate_sscs(const SscsParams& params) {
    if (sscs_norm_denominator(params) <= kDegeneracyEps)
        throw DegenerateSuperpositionError(
            "sscs: superposition normalization 2 + 2 cos(theta) xi^{2j} vanished "
            "(theta -> pi with eta -> 0); the analytic limit is number_state(1)");
}

SpinState scs(const SpinSpace& space, Complex eta) {
    const int d = space.dimension();
    if (eta == Complex(0.0, 0.0)) return number_state(space, 0);

    const double log_abs_eta = std::log(std::abs(eta));
    const double arg_eta = std::arg(eta);
    std::vector<double> logmag(static_cast<std::size_t>(d));
    std::vector<double> phase(static_cast<std::size_t>(d));
    std::vector<Complex> pre(static_cast<std::size_t>(d), Complex(1.0, 0.0));
    for (int n = 0; n < d; ++n) {
        logmag[n] = 0.5 * num::log_binomial(space.twice_j(), n) + n * log_abs_eta;
        phase[n] = n * arg_eta;
    }
    return from_log_amplitudes(space, logmag, phase, pre);
}

SpinState sscs(const SpinSpace& space, const SscsParams& params) {
    require_space_matches(space, params);
    validate_sscs(params);
    if (params.eta == Complex(0.0, 0.0)) return number_state(space, 0);

    const int d = space.dimension();
    const auto ph = num::phase_of(params.theta);
    const Complex relative(ph.c, ph.s);
    const double log_abs_eta = std::log(std::abs(params.eta));
    const double arg_eta = std::arg(params.eta);

    std::vector<double> logmag(static_cast<std::size_t>(d));
    std::vector<double> phase(static_cast<std::size_t>(d));
    std::vector<Complex> pre(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) {
        logmag[n] = 0.5 * num::log_binomial(space.twice_j(), n) + n * log_abs_eta;
        phase[n] = n * arg_eta;
        pre[n] = Complex(1.0, 0.0) + (n % 2 == 0 ? relative : -relative);
    }
    return from_log_amplitudes(space, logmag, phase, pre);
}

double scs_overlap_minus(const SpinSpace& space, Complex eta) {
    return num::signed_pow(xi_param(eta), space.twice_j());
}

Complex sscs_cross_overlap(const SscsParams& params) {
    validate_sscs(params);
    validate_sscs({params.twice_j, params.eta, params.theta + std::numbers::pi});
    const auto ph = num::phase_of(params.theta);
    const double xi2j = num::signed_pow(xi_param(params.eta), params.twice_j);
    return Complex(0.0, -1.0) * ph.s * xi2j / std::sqrt(1.0 - ph.c * ph.c * xi2j * xi2j);
}

SpinState one_axis_twist(const SpinState& state, double chi_t) {
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (int n = 0; n < state.dimension(); ++n) {
        const double angle = -chi_t * static_cast<double>(n) * static_cast<double>(n);
        amps[static_cast<std::size_t>(n)] *= std::polar(1.0, angle);
    }
    return {state.space(), std::move(amps)};
}

double global_phase_fidelity(const SpinState& s1, const SpinState& s2) {
    return std::abs(inner(s1, s2));
}

}  // namespace spincat
