#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spincat {

using Complex = std::complex<double>;

// Spin magnitude is stored as 2j so half-integer spins stay exact integers.
// The hard cap keeps dense matrices at desk scale.
inline constexpr int kMaxTwiceJ = 200;

class SpinSpace {
public:
    explicit SpinSpace(int twice_j);

    int twice_j() const noexcept { return twice_j_; }
    int dimension() const noexcept { return twice_j_ + 1; }
    double j() const noexcept { return 0.5 * twice_j_; }

    friend bool operator==(const SpinSpace&, const SpinSpace&) = default;

private:
    int twice_j_;
};

/// Normalized state over the number basis |0>..|2j>. Every public
/// constructor normalizes, so the squared amplitudes always sum to one.
class SpinState {
public:
    SpinState(const SpinSpace& space, std::vector<Complex> amplitudes);

    const SpinSpace& space() const noexcept { return space_; }
    int dimension() const noexcept { return space_.dimension(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    Complex amplitude(int n) const;
    Eigen::VectorXcd vector() const;

private:
    SpinSpace space_;
    std::vector<Complex> amps_;
};

/// Dense operator in the number basis.
class SpinOperator {
public:
    SpinOperator(const SpinSpace& space, Eigen::MatrixXcd entries);

    const SpinSpace& space() const noexcept { return space_; }
    const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
    bool is_hermitian(double tol = 1e-12) const;
    SpinOperator adjoint() const;

    friend SpinOperator operator*(const SpinOperator& a, const SpinOperator& b);
    friend SpinOperator operator+(const SpinOperator& a, const SpinOperator& b);
    friend SpinOperator operator-(const SpinOperator& a, const SpinOperator& b);
    friend SpinOperator operator*(Complex c, const SpinOperator& a);

private:
    SpinSpace space_;
    Eigen::MatrixXcd m_;
};

/// Basis state |n>, eigenstate of the number operator.
SpinState number_state(const SpinSpace& space, int n);

SpinOperator op_identity(const SpinSpace& space);
SpinOperator op_jminus(const SpinSpace& space);
SpinOperator op_jplus(const SpinSpace& space);
SpinOperator op_jz(const SpinSpace& space);
SpinOperator op_jx(const SpinSpace& space);
SpinOperator op_jy(const SpinSpace& space);
SpinOperator op_number(const SpinSpace& space);

/// op * state as a raw (unnormalized) coefficient vector.
Eigen::VectorXcd apply(const SpinOperator& op, const SpinState& state);

/// <state| op |state>
Complex expectation(const SpinState& state, const SpinOperator& op);

/// <op^2> - <op>^2 for Hermitian op. Roundoff-negative results are clamped
/// to zero; anything below -1e-12 raises InternalConsistencyError.
double variance(const SpinState& state, const SpinOperator& op);

/// <s1|s2>, conjugate-linear in the first argument.
Complex inner(const SpinState& s1, const SpinState& s2);

}  // namespace spincat
