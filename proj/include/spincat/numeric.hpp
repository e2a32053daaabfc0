#pragma once

#include <span>

namespace spincat::num {

// A term coeff * sign * exp(logmag), used to evaluate ratios of linear
// combinations of huge powers like (1 + |eta|^2)^{2j} without overflow.
// A structurally zero term (0^positive) is encoded as sign = 0.
struct PowTerm {
    double coeff = 1.0;
    double sign = 1.0;
    double logmag = 0.0;
};

/// base^power as a PowTerm, with 0^0 = 1 and sign tracking for base < 0.
PowTerm pow_term(double base, long power, double coeff = 1.0);

/// Ratio of two sums of PowTerms, evaluated after shifting every exponent
/// by the common maximum. The caller guarantees the denominator sum is
/// bounded away from zero relative to its largest term.
double pow_ratio(std::span<const PowTerm> numerator,
                 std::span<const PowTerm> denominator);

/// log of the binomial coefficient C(n, k), 0 <= k <= n.
double log_binomial(int n, int k);

// cos/sin of a relative phase. Exact at theta = 0 and theta = +-pi so that
// parity cancellations in superposition amplitudes are exact zeros.
struct Phase {
    double c;
    double s;
};

Phase phase_of(double theta);

/// sign(x)^power * exp(power * log|x|) for |x| <= 1; 0^0 = 1.
double signed_pow(double base, long power);

}  // namespace spincat::num
