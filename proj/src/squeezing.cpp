#include "spincat/squeezing.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spincat/errors.hpp"
#include "spincat/numeric.hpp"

namespace spincat {

namespace {

constexpr double kDenominatorEps = 1e-14;

UnitVector cross(const UnitVector& a, const UnitVector& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

XiValue classify(double numerator, double denominator, bool force_degenerate) {
    if (denominator < kDenominatorEps) {
        if (force_degenerate || numerator < kDenominatorEps) return XiValue::degenerate();
        return XiValue::infinite();
    }
    return XiValue::finite(numerator / denominator);
}

double xi_y2_closedform_at(int twice_j, double eta_abs, double theta) {
    const XiValue v = xi_xyz_closedform({twice_j, Complex(eta_abs, 0.0), theta}).y;
    // Markers sit above any finite crossing level.
    return v.is_finite() ? v.value() : std::numeric_limits<double>::infinity();
}

}  // namespace

UnitVector UnitVector::normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 1e-12))
        throw std::invalid_argument("UnitVector::normalized: vector too short to normalize");
    return {x / n, y / n, z / n};
}

std::pair<UnitVector, UnitVector> complete_triad(const UnitVector& n1) {
    const std::array<UnitVector, 3> axes = {kXAxis, kYAxis, kZAxis};
    int pick = 0;
    double best = std::abs(n1.dot(axes[0]));
    for (int i = 1; i < 3; ++i) {
        const double d = std::abs(n1.dot(axes[i]));
        if (d < best) {
            best = d;
            pick = i;
        }
    }
    const UnitVector raw = cross(n1, axes[static_cast<std::size_t>(pick)]);
    const UnitVector n2 = UnitVector::normalized(raw.x, raw.y, raw.z);
    return {n2, cross(n1, n2)};
}

double XiValue::value() const {
    if (kind_ != Kind::Finite)
        throw std::logic_error("XiValue::value: marker has no finite value");
    return value_;
}

double XiValue::as_double() const noexcept {
    switch (kind_) {
        case Kind::Finite: return value_;
        case Kind::Infinite: return std::numeric_limits<double>::infinity();
        default: return std::numeric_limits<double>::quiet_NaN();
    }
}

SqueezingReport xi_squared_oracle(const SpinState& state, const UnitVector& n1) {
    const SpinSpace& space = state.space();
    const SpinOperator jx = op_jx(space), jy = op_jy(space), jz = op_jz(space);
    const double mx = expectation(state, jx).real();
    const double my = expectation(state, jy).real();
    const double mz = expectation(state, jz).real();

    const SpinOperator jn1 = Complex(n1.x) * jx + Complex(n1.y) * jy + Complex(n1.z) * jz;
    const double num = state.space().twice_j() * variance(state, jn1);

    const auto [n2, n3] = complete_triad(n1);
    const double p2 = n2.x * mx + n2.y * my + n2.z * mz;
    const double p3 = n3.x * mx + n3.y * my + n3.z * mz;
    const double den = p2 * p2 + p3 * p3;

    SqueezingReport report{n1, classify(num, den, false), {mx, my, mz}, den < kDenominatorEps};
    return report;
}

XiTriple xi_xyz_closedform(const SscsParams& params) {
    const MomentSet m = cartesian_moments(params);
    const double tj = static_cast<double>(params.twice_j);
    const bool mean_along_z = num::phase_of(params.theta).s == 0.0;

    auto clamp0 = [](double v) { return v < 0.0 ? 0.0 : v; };
    const double vx = clamp0(m.jx2 - m.jx * m.jx);
    const double vy = clamp0(m.jy2 - m.jy * m.jy);
    const double vz = clamp0(m.jz2 - m.jz * m.jz);

    XiTriple out{
        classify(tj * vx, m.jy * m.jy + m.jz * m.jz, false),
        classify(tj * vy, m.jx * m.jx + m.jz * m.jz, false),
        classify(tj * vz, m.jx * m.jx + m.jy * m.jy, mean_along_z),
    };
    return out;
}

double find_critical_eta(int twice_j, double theta) {
    if (twice_j <= 0 || twice_j % 2 == 0)
        throw std::invalid_argument("find_critical_eta: twice_j must be a positive odd integer "
                                    "(half-integer j)");
    if (num::phase_of(theta).c != -1.0)
        throw std::invalid_argument("find_critical_eta: only the odd superposition (theta = pi) "
                                    "has a squeezing onset");

    constexpr double kStep = 0.05;
    constexpr int kSteps = 200;  // covers (0, 10]
    // the 1e-12 margin keeps roundoff on exactly-flat curves (2j = 1 sits at
    // xi_y^2 = 1 identically) from faking a bracket
    constexpr double kMargin = 1e-12;
    auto f = [&](double e) { return xi_y2_closedform_at(twice_j, e, theta) - 1.0; };

    double lo = 0.0, hi = 0.0;
    double prev_eta = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    bool have_prev = false;
    for (int k = 1; k <= kSteps; ++k) {
        const double e = kStep * k;
        const double cur = f(e);
        if (have_prev && prev > kMargin && cur < -kMargin) {
            lo = prev_eta;
            hi = e;
            break;
        }
        prev = cur;
        prev_eta = e;
        have_prev = true;
    }
    if (hi == 0.0)
        throw NoCrossingError("find_critical_eta: no crossing of xi_y^2 = 1 in (0, 10]");

    for (int it = 0; it < 60 && (hi - lo) > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double odd_scs_peak_xi_y2(int twice_j, double eta_c) {
    if (twice_j <= 0 || twice_j % 2 == 0)
        throw std::invalid_argument("odd_scs_peak_xi_y2: twice_j must be a positive odd integer");
    constexpr double kStep = 0.25;
    double peak = -std::numeric_limits<double>::infinity();
    for (int k = 1; kStep * k < eta_c; ++k) {
        const XiValue v =
            xi_xyz_closedform({twice_j, Complex(kStep * k, 0.0), std::numbers::pi}).y;
        if (v.is_finite() && v.value() > peak) peak = v.value();
    }
    if (!std::isfinite(peak))
        throw std::invalid_argument("odd_scs_peak_xi_y2: no finite sample below eta_c");
    return peak;
}

std::optional<UnitVector> mean_spin_direction(const SpinState& state) {
    const SpinSpace& space = state.space();
    const double mx = expectation(state, op_jx(space)).real();
    const double my = expectation(state, op_jy(space)).real();
    const double mz = expectation(state, op_jz(space)).real();
    const double n = std::sqrt(mx * mx + my * my + mz * mz);
    if (n < 1e-12) return std::nullopt;
    return UnitVector{mx / n, my / n, mz / n};
}

}  // namespace spincat
