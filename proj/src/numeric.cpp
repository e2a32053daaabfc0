#include "spincat/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace spincat::num {

PowTerm pow_term(double base, long power, double coeff) {
    if (power == 0) return {coeff, 1.0, 0.0};
    if (base == 0.0) return {coeff, 0.0, 0.0};
    const double sign = (base < 0.0 && power % 2 != 0) ? -1.0 : 1.0;
    return {coeff, sign, static_cast<double>(power) * std::log(std::abs(base))};
}

double pow_ratio(std::span<const PowTerm> numerator,
                 std::span<const PowTerm> denominator) {
    double shift = -std::numeric_limits<double>::infinity();
    auto alive = [](const PowTerm& t) { return t.sign != 0.0 && t.coeff != 0.0; };
    for (const auto& t : numerator)
        if (alive(t)) shift = std::max(shift, t.logmag);
    for (const auto& t : denominator)
        if (alive(t)) shift = std::max(shift, t.logmag);

    auto accumulate = [&](std::span<const PowTerm> terms) {
        double sum = 0.0;
        for (const auto& t : terms)
            if (alive(t)) sum += t.coeff * t.sign * std::exp(t.logmag - shift);
        return sum;
    };
    return accumulate(numerator) / accumulate(denominator);
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

Phase phase_of(double theta) {
    if (theta == 0.0) return {1.0, 0.0};
    if (theta == std::numbers::pi || theta == -std::numbers::pi) return {-1.0, 0.0};
    return {std::cos(theta), std::sin(theta)};
}

double signed_pow(double base, long power) {
    if (power == 0) return 1.0;
    if (base == 0.0) return 0.0;
    const double sign = (base < 0.0 && power % 2 != 0) ? -1.0 : 1.0;
    return sign * std::exp(static_cast<double>(power) * std::log(std::abs(base)));
}

}  // namespace spincat::num
