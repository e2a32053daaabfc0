#pragma once

#include <array>
#include <optional>
#include <utility>

#include "spincat/closedform.hpp"

namespace spincat {

struct UnitVector {
    double x, y, z;

    /// Normalizes (x, y, z); throws std::invalid_argument on (near-)zero input.
    static UnitVector normalized(double x, double y, double z);
    double dot(const UnitVector& o) const noexcept { return x * o.x + y * o.y + z * o.z; }
};

inline constexpr UnitVector kXAxis{1.0, 0.0, 0.0};
inline constexpr UnitVector kYAxis{0.0, 1.0, 0.0};
inline constexpr UnitVector kZAxis{0.0, 0.0, 1.0};

/// Deterministic right-handed completion of n1: n2 is the normalized cross
/// of n1 with the coordinate axis least aligned with it (ties resolved in
/// x, y, z order), n3 = n1 x n2.
std::pair<UnitVector, UnitVector> complete_triad(const UnitVector& n1);

/// A squeezing value that distinguishes an actual divergence of the
/// criterion (Infinite) from a point where the criterion itself is
/// ill-posed, 0/0 or a frame without transverse signal (Degenerate).
/// Infinity is never emitted as a floating-point division result.
class XiValue {
public:
    enum class Kind { Finite, Infinite, Degenerate };

    static XiValue finite(double v) { return {Kind::Finite, v}; }
    static XiValue infinite() { return {Kind::Infinite, 0.0}; }
    static XiValue degenerate() { return {Kind::Degenerate, 0.0}; }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// Finite value; throws std::logic_error for markers.
    double value() const;
    /// Finite value, +inf for Infinite, quiet NaN for Degenerate.
    double as_double() const noexcept;

private:
    XiValue(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

struct SqueezingReport {
    UnitVector direction;
    XiValue xi2;
    std::array<double, 3> mean_spin;  // <Jx>, <Jy>, <Jz>
    bool degenerate;                  // true iff <J_n2>^2 + <J_n3>^2 < 1e-14
};

/// Direction-resolved squeezing parameter from brute-force expectations:
///   xi^2_{n1} = 2j (Delta J_{n1})^2 / (<J_{n2}>^2 + <J_{n3}>^2)
/// with (n2, n3) = complete_triad(n1). The value is invariant under any
/// rotation of (n2, n3) about n1.
SqueezingReport xi_squared_oracle(const SpinState& state, const UnitVector& n1);

struct XiTriple {
    XiValue x, y, z;
};

/// Closed-form xi^2 along the coordinate axes from cartesian_moments. For
/// theta in {0, pi} the x/y components reduce to 2j<Jx^2>/<Jz>^2 and
/// 2j<Jy^2>/<Jz>^2; the z component is always Degenerate there (the mean
/// spin lies along z, leaving no transverse signal). x/y at a collapsed
/// denominator report Infinite when the variance survives, Degenerate on
/// true 0/0 (j = 1 at |eta| = 1).
XiTriple xi_xyz_closedform(const SscsParams& params);

/// First |eta| where the odd superposition's xi_y^2 crosses 1 from above,
/// half-integer j only: bracket by scanning (0, 10] at step 0.05, then
/// bisect to 1e-6. Throws NoCrossingError when no bracket exists.
double find_critical_eta(int twice_j, double theta);

/// Hump magnitude of xi_y^2 for the odd superposition: maximum over the
/// coarse grid |eta| in {0.25, 0.5, ...} below eta_c, markers skipped. The
/// 0.25 step keeps the j-dependence of the near-|eta|=1 hump above double
/// roundoff, which a finer grid would flatten.
double odd_scs_peak_xi_y2(int twice_j, double eta_c);

/// (<Jx>, <Jy>, <Jz>) normalized, or nullopt when the mean spin vanishes.
std::optional<UnitVector> mean_spin_direction(const SpinState& state);

}  // namespace spincat
