#pragma once

#include <optional>

#include "spincat/states.hpp"

namespace spincat {

/// Expectation values of one superposition state, all from closed forms.
struct MomentSet {
    double n1, n2, n3, n4;     // <N>..<N^4>
    Complex jminus;            // <J->;  <J+> is its conjugate
    Complex jminus2;           // <J-^2>; <J+^2> is its conjugate
    double jx, jy, jz;
    double jx2, jy2, jz2;
};

struct NMoments {
    double n1, n2, n3, n4;
};

/// G(lambda) = <lambda^N> =
///   [(1+lambda|eta|^2)^{2j} + cos(theta)(1-lambda|eta|^2)^{2j}] /
///   [(1+|eta|^2)^{2j}       + cos(theta)(1-|eta|^2)^{2j}]
double generating_function(const SscsParams& params, double lambda);

/// Factorial moment F(k) = <N(N-1)...(N-k+1)>, k in 1..4. Returns 0 when
/// k > 2j (the falling factorial kills every occupied level).
double factorial_moment(const SscsParams& params, int k);

/// <N>, <N^2>, <N^3>, <N^4> from F(1..4).
NMoments n_moments(const SscsParams& params);

/// Second-order correlation <J+^2 J-^2> / <J+ J->^2, expanded over <N^k>.
/// Depends on eta only through |eta|. Undefined for the vacuum-like state.
double g2(const SscsParams& params);

/// g2 of the number state |n>: (n-1)(2j-n+2) / (n (2j-n+1)), n >= 1.
double g2_number_state(int twice_j, int n);

/// Gtilde(lambda) = <eta,theta| lambda^N |eta,theta+pi>.
Complex gtilde(const SscsParams& params, double lambda);

/// <J->, evaluated in the pole-free form
///   -i 2j eta sin(theta) (1-|eta|^2)^{2j-1} /
///   [(1+|eta|^2)^{2j} + cos(theta)(1-|eta|^2)^{2j}],
/// finite at |eta| = 1.
Complex jminus_expect(const SscsParams& params);

/// <J-^2> = eta^2 { F(2) - 2(2j-1)[F(1) - j] }.
Complex jminus2_expect(const SscsParams& params);

/// All Cartesian first and second moments assembled from the above.
MomentSet cartesian_moments(const SscsParams& params);

struct J1XiPair {
    std::optional<double> x;  // empty exactly at the |eta| = 1 pole
    double y;
};

/// j = 1 even superposition squeezing parameters
///   xi_x^2 = (1+|eta|^4)/(1-|eta|^2)^2,  xi_y^2 = (1+|eta|^4)/(1+|eta|^2)^2.
/// xi_y^2 is defined everywhere and carries the analytic value 1/2 straight
/// through |eta| = 1, where xi_x^2 has its pole.
J1XiPair j1_even_xi(double eta_abs);

/// The x component alone; throws PoleError at |eta| = 1.
double j1_even_xi_x(double eta_abs);

}  // namespace spincat
