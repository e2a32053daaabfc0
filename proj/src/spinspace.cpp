#include "spincat/spinspace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "spincat/errors.hpp"

namespace spincat {

namespace {

void require_same_space(const SpinSpace& a, const SpinSpace& b, const char* what) {
    if (!(a == b))
        throw SpaceMismatchError(std::string(what) + ": operands live in different spin spaces (2j=" +
                                 std::to_string(a.twice_j()) + " vs 2j=" + std::to_string(b.twice_j()) + ")");
}

}  // namespace

SpinSpace::SpinSpace(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 0)
        throw std::invalid_argument("SpinSpace: twice_j must be non-negative");
    if (twice_j > kMaxTwiceJ)
        throw std::invalid_argument("SpinSpace: twice_j exceeds the dense-matrix cap of " +
                                    std::to_string(kMaxTwiceJ));
}

SpinState::SpinState(const SpinSpace& space, std::vector<Complex> amplitudes)
    : space_(space), amps_(std::move(amplitudes)) {
    if (static_cast<int>(amps_.size()) != space_.dimension())
        throw std::invalid_argument("SpinState: amplitude count does not match dimension");
    double norm2 = 0.0;
    for (const auto& a : amps_) norm2 += std::norm(a);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw std::invalid_argument("SpinState: amplitudes are not normalizable");
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps_) a *= inv;
}

Complex SpinState::amplitude(int n) const {
    if (n < 0 || n >= dimension())
        throw std::out_of_range("SpinState::amplitude: index outside 0..2j");
    return amps_[static_cast<std::size_t>(n)];
}

Eigen::VectorXcd SpinState::vector() const {
    Eigen::VectorXcd v(dimension());
    for (int n = 0; n < dimension(); ++n) v(n) = amps_[static_cast<std::size_t>(n)];
    return v;
}

SpinOperator::SpinOperator(const SpinSpace& space, Eigen::MatrixXcd entries)
    : space_(space), m_(std::move(entries)) {
    if (m_.rows() != space_.dimension() || m_.cols() != space_.dimension())
        throw std::invalid_argument("SpinOperator: matrix shape does not match dimension");
}

bool SpinOperator::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

SpinOperator SpinOperator::adjoint() const { return {space_, m_.adjoint()}; }

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b) {
    require_same_space(a.space_, b.space_, "operator*");
    return {a.space_, a.m_ * b.m_};
}

SpinOperator operator+(const SpinOperator& a, const SpinOperator& b) {
    require_same_space(a.space_, b.space_, "operator+");
    return {a.space_, a.m_ + b.m_};
}

SpinOperator operator-(const SpinOperator& a, const SpinOperator& b) {
    require_same_space(a.space_, b.space_, "operator-");
    return {a.space_, a.m_ - b.m_};
}

SpinOperator operator*(Complex c, const SpinOperator& a) { return {a.space_, c * a.m_}; }

SpinState number_state(const SpinSpace& space, int n) {
    if (n < 0 || n > space.twice_j())
        throw std::out_of_range("number_state: n must satisfy 0 <= n <= 2j");
    std::vector<Complex> amps(static_cast<std::size_t>(space.dimension()), Complex(0.0, 0.0));
    amps[static_cast<std::size_t>(n)] = Complex(1.0, 0.0);
    return {space, std::move(amps)};
}

SpinOperator op_identity(const SpinSpace& space) {
    return {space, Eigen::MatrixXcd::Identity(space.dimension(), space.dimension())};
}

SpinOperator op_jminus(const SpinSpace& space) {
    const int d = space.dimension();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    // J-|n> = sqrt(n (2j - n + 1)) |n-1>
    for (int n = 1; n < d; ++n)
        m(n - 1, n) = std::sqrt(static_cast<double>(n) * (space.twice_j() - n + 1));
    return {space, std::move(m)};
}

SpinOperator op_jplus(const SpinSpace& space) { return op_jminus(space).adjoint(); }

SpinOperator op_number(const SpinSpace& space) {
    const int d = space.dimension();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) m(n, n) = static_cast<double>(n);
    return {space, std::move(m)};
}

SpinOperator op_jz(const SpinSpace& space) {
    const int d = space.dimension();
    const double j = space.j();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n < d; ++n) m(n, n) = static_cast<double>(n) - j;
    return {space, std::move(m)};
}

SpinOperator op_jx(const SpinSpace& space) {
    return {space, 0.5 * (op_jplus(space).matrix() + op_jminus(space).matrix())};
}

SpinOperator op_jy(const SpinSpace& space) {
    return {space, Complex(0.0, -0.5) * (op_jplus(space).matrix() - op_jminus(space).matrix())};
}

Eigen::VectorXcd apply(const SpinOperator& op, const SpinState& state) {
    require_same_space(op.space(), state.space(), "apply");
    return op.matrix() * state.vector();
}

Complex expectation(const SpinState& state, const SpinOperator& op) {
    require_same_space(op.space(), state.space(), "expectation");
    const Eigen::VectorXcd v = state.vector();
    return v.dot(op.matrix() * v);  // Eigen's dot conjugates the left factor
}

double variance(const SpinState& state, const SpinOperator& op) {
    if (!op.is_hermitian())
        throw NonHermitianError("variance: operator is not Hermitian");
    const Eigen::VectorXcd w = apply(op, state);
    const double m2 = w.squaredNorm();          // <op^2> = |op psi|^2
    const double m1 = state.vector().dot(w).real();
    double var = m2 - m1 * m1;
    if (var < -1e-12)
        throw InternalConsistencyError("variance: negative beyond roundoff (" +
                                       std::to_string(var) + ")");
    return var < 0.0 ? 0.0 : var;
}

Complex inner(const SpinState& s1, const SpinState& s2) {
    require_same_space(s1.space(), s2.space(), "inner");
    return s1.vector().dot(s2.vector());
}

}  // namespace spincat
