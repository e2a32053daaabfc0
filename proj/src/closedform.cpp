#include "spincat/closedform.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spincat/errors.hpp"
#include "spincat/numeric.hpp"

namespace spincat {

namespace {

using num::PowTerm;

// Shared denominator (1+|eta|^2)^{2j} + cos(theta)(1-|eta|^2)^{2j}. Both the
// generating function and every moment are ratios against it, so each term
// is kept as sign + log-magnitude and the ratio is evaluated with a common
// exponent shift. This is what keeps 2j = 200, |eta| = 1e3 finite.
std::array<PowTerm, 2> denominator_terms(const SscsParams& params) {
    const double e2 = std::norm(params.eta);
    const double c = num::phase_of(params.theta).c;
    return {num::pow_term(1.0 + e2, params.twice_j),
            num::pow_term(1.0 - e2, params.twice_j, c)};
}

double falling_factorial(int n, int k) {
    double f = 1.0;
    for (int i = 0; i < k; ++i) f *= static_cast<double>(n - i);
    return f;
}

}  // namespace

double generating_function(const SscsParams& params, double lambda) {
    validate_sscs(params);
    const double e2 = std::norm(params.eta);
    const double c = num::phase_of(params.theta).c;
    const std::array<PowTerm, 2> numer = {num::pow_term(1.0 + lambda * e2, params.twice_j),
                                          num::pow_term(1.0 - lambda * e2, params.twice_j, c)};
    return num::pow_ratio(numer, denominator_terms(params));
}

double factorial_moment(const SscsParams& params, int k) {
    if (k < 1 || k > 4)
        throw std::invalid_argument("factorial_moment: k must be in 1..4");
    validate_sscs(params);
    if (k > params.twice_j) return 0.0;
    if (params.eta == Complex(0.0, 0.0)) return 0.0;

    const double e2 = std::norm(params.eta);
    const double c = num::phase_of(params.theta).c;
    const double log_e2k = static_cast<double>(k) * std::log(e2);
    const double ff = falling_factorial(params.twice_j, k);
    const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;

    // F(k) = (2j)!/(2j-k)! |eta|^{2k}
    //        [(1+|eta|^2)^{2j-k} + (-1)^k cos(theta) (1-|eta|^2)^{2j-k}] / D
    PowTerm plus = num::pow_term(1.0 + e2, params.twice_j - k, ff);
    plus.logmag += log_e2k;
    PowTerm minus = num::pow_term(1.0 - e2, params.twice_j - k, ff * sign_k * c);
    minus.logmag += log_e2k;
    const std::array<PowTerm, 2> numer = {plus, minus};
    return num::pow_ratio(numer, denominator_terms(params));
}

NMoments n_moments(const SscsParams& params) {
    const double f1 = factorial_moment(params, 1);
    const double f2 = factorial_moment(params, 2);
    const double f3 = factorial_moment(params, 3);
    const double f4 = factorial_moment(params, 4);
    return {f1, f1 + f2, f1 + 3.0 * f2 + f3, f1 + 7.0 * f2 + 6.0 * f3 + f4};
}

double g2(const SscsParams& params) {
    const auto [n1, n2, n3, n4] = n_moments(params);
    const double a = static_cast<double>(params.twice_j);
    const double denom = (a + 1.0) * n1 - n2;  // <N(2j - N + 1)>
    if (denom <= 1e-14)
        throw UndefinedCorrelationError("g2: <J+ J-> vanishes for this state");
    // <N(N-1)(2j-N+1)(2j-N+2)> expanded over <N^k>
    const double numer =
        n4 - (2.0 * a + 4.0) * n3 + (a * a + 5.0 * a + 5.0) * n2 - (a + 1.0) * (a + 2.0) * n1;
    return numer / (denom * denom);
}

double g2_number_state(int twice_j, int n) {
    if (n < 1 || n > twice_j)
        throw std::out_of_range("g2_number_state: n must satisfy 1 <= n <= 2j");
    const double nn = static_cast<double>(n);
    const double a = static_cast<double>(twice_j);
    return (nn - 1.0) * (a - nn + 2.0) / (nn * (a - nn + 1.0));
}

Complex gtilde(const SscsParams& params, double lambda) {
    validate_sscs(params);
    validate_sscs({params.twice_j, params.eta, params.theta + std::numbers::pi});
    const double e2 = std::norm(params.eta);
    const auto ph = num::phase_of(params.theta);
    const double xi2j = num::signed_pow(xi_param(params.eta), params.twice_j);
    const double root = 1.0 - ph.c * ph.c * xi2j * xi2j;
    if (root <= 1e-28)
        throw DegenerateSuperpositionError("gtilde: both superpositions collapse here");

    // (1 - lambda|eta|^2)^{2j} / (1 + |eta|^2)^{2j}, shift-evaluated
    const std::array<PowTerm, 1> numer = {num::pow_term(1.0 - lambda * e2, params.twice_j)};
    const std::array<PowTerm, 1> denom = {num::pow_term(1.0 + e2, params.twice_j)};
    const double ratio = num::pow_ratio(numer, denom);
    return Complex(0.0, -1.0) * ph.s * ratio / std::sqrt(root);
}

Complex jminus_expect(const SscsParams& params) {
    validate_sscs(params);
    if (params.twice_j == 0) return {0.0, 0.0};
    const double e2 = std::norm(params.eta);
    const auto ph = num::phase_of(params.theta);
    if (ph.s == 0.0) return {0.0, 0.0};

    // The printed form has xi^{2j} / (1-|eta|^2), a 0/0 at |eta| = 1; with
    // the pole canceled the numerator carries (1-|eta|^2)^{2j-1} instead.
    const std::array<PowTerm, 1> numer = {num::pow_term(1.0 - e2, params.twice_j - 1)};
    const double ratio = num::pow_ratio(numer, denominator_terms(params));
    return Complex(0.0, -1.0) * params.eta * static_cast<double>(params.twice_j) * ph.s * ratio;
}

Complex jminus2_expect(const SscsParams& params) {
    const double f1 = factorial_moment(params, 1);
    const double f2 = factorial_moment(params, 2);
    const double j = 0.5 * params.twice_j;
    return params.eta * params.eta *
           (f2 - 2.0 * (params.twice_j - 1.0) * (f1 - j));
}

MomentSet cartesian_moments(const SscsParams& params) {
    const auto nm = n_moments(params);
    const Complex jm = jminus_expect(params);
    const Complex jm2 = jminus2_expect(params);
    const double j = 0.5 * params.twice_j;

    MomentSet m{};
    m.n1 = nm.n1;
    m.n2 = nm.n2;
    m.n3 = nm.n3;
    m.n4 = nm.n4;
    m.jminus = jm;
    m.jminus2 = jm2;
    // Jx = (J+ + J-)/2, Jy = (J+ - J-)/(2i), with <J+> = conj<J->
    m.jx = jm.real();
    m.jy = -jm.imag();
    m.jz = nm.n1 - j;
    const double common = 2.0 * j * (2.0 * nm.n1 + 1.0) - 2.0 * nm.n2;
    m.jx2 = 0.25 * (common + 2.0 * jm2.real());
    m.jy2 = 0.25 * (common - 2.0 * jm2.real());
    m.jz2 = nm.n2 - 2.0 * j * nm.n1 + j * j;
    return m;
}

J1XiPair j1_even_xi(double eta_abs) {
    const double e2 = eta_abs * eta_abs;
    const double e4 = e2 * e2;
    J1XiPair out;
    out.y = (1.0 + e4) / ((1.0 + e2) * (1.0 + e2));
    if (eta_abs == 1.0)
        out.x = std::nullopt;
    else
        out.x = (1.0 + e4) / ((1.0 - e2) * (1.0 - e2));
    return out;
}

double j1_even_xi_x(double eta_abs) {
    const auto pair = j1_even_xi(eta_abs);
    if (!pair.x)
        throw PoleError("j1_even_xi_x: xi_x^2 has a pole at |eta| = 1");
    return *pair.x;
}

}  // namespace spincat
