#include "spincat/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "spincat/numeric.hpp"

namespace spincat {

namespace {

constexpr double kPi = std::numbers::pi;

struct Grid {
    std::vector<int> twice_j;
    std::vector<double> eta_abs;
    std::vector<double> eta_arg;
    std::vector<double> theta;
};

Grid grid_for(GridPreset preset) {
    switch (preset) {
        case GridPreset::Small:
            return {{1, 2, 3, 4}, {0.5, 1.0, 2.0}, {0.0}, {0.0, kPi / 2, kPi}};
        case GridPreset::Default:
            return {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
                    {0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 3.0},
                    {0.0, kPi / 3},
                    {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi}};
        case GridPreset::Large:
            return {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 20, 30, 40, 50, 60},
                    {0.1, 0.5, 0.9, 0.99, 1.0, 1.01, 1.1, 2.0, 3.0},
                    {0.0, kPi / 3},
                    {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi}};
    }
    throw std::logic_error("grid_for: unknown preset");
}

// Brute-force matrices for one spin space, built once per twice_j.
struct OperatorCache {
    Eigen::MatrixXcd jm, jp, num, jm2, jpjm, jp2jm2, jx, jy, jz, jx2, jy2, jz2;

    explicit OperatorCache(const SpinSpace& space) {
        jm = op_jminus(space).matrix();
        jp = op_jplus(space).matrix();
        num = op_number(space).matrix();
        jm2 = jm * jm;
        jpjm = jp * jm;
        jp2jm2 = jp * jp * jm2;
        jx = op_jx(space).matrix();
        jy = op_jy(space).matrix();
        jz = op_jz(space).matrix();
        jx2 = jx * jx;
        jy2 = jy * jy;
        jz2 = jz * jz;
    }
};

class Tracker {
public:
    Tracker(double rtol) : rtol_(rtol), atol_(rtol / 10.0) {}

    void record(const std::string& name, Complex got, Complex want) {
        auto& q = slot(name);
        const double dev = std::abs(got - want);
        const double mag = std::abs(want);
        q.samples += 1;
        q.max_abs_dev = std::max(q.max_abs_dev, dev);
        if (mag > 0.0) q.max_rel_dev = std::max(q.max_rel_dev, dev / mag);
        if (dev > std::max(atol_, rtol_ * mag)) q.failures += 1;
    }

    void record_residual(const std::string& name, double residual) {
        record(name, Complex(residual, 0.0), Complex(0.0, 0.0));
    }

    void record_mismatch(const std::string& name) {
        auto& q = slot(name);
        q.samples += 1;
        q.max_abs_dev = std::numeric_limits<double>::infinity();
        q.failures += 1;
    }

    VerifyReport finish(long points) {
        VerifyReport report;
        report.points = points;
        report.quantities = stats_;
        for (const auto& q : stats_)
            if (q.failures > 0) report.pass = false;
        return report;
    }

private:
    QuantityStats& slot(const std::string& name) {
        for (auto& q : stats_)
            if (q.name == name) return q;
        stats_.push_back({name, 0.0, 0.0, 0, 0});
        return stats_.back();
    }

    double rtol_, atol_;
    std::vector<QuantityStats> stats_;
};

double oracle_lambda_moment(const SpinState& state, double lambda) {
    double sum = 0.0;
    for (int n = 0; n < state.dimension(); ++n)
        sum += std::pow(lambda, n) * std::norm(state.amplitude(n));
    return sum;
}

double oracle_factorial_moment(const SpinState& state, int k) {
    double sum = 0.0;
    for (int n = k; n < state.dimension(); ++n) {
        double f = 1.0;
        for (int i = 0; i < k; ++i) f *= static_cast<double>(n - i);
        sum += f * std::norm(state.amplitude(n));
    }
    return sum;
}

void compare_xi(Tracker& tracker, const std::string& name, const XiValue& closed,
                const XiValue& oracle) {
    if (closed.is_finite() != oracle.is_finite()) {
        tracker.record_mismatch(name);
        return;
    }
    if (closed.is_finite())
        tracker.record(name, Complex(closed.value(), 0.0), Complex(oracle.value(), 0.0));
}

}  // namespace

GridPreset parse_grid_preset(const std::string& name) {
    if (name == "small") return GridPreset::Small;
    if (name == "default") return GridPreset::Default;
    if (name == "large") return GridPreset::Large;
    throw std::invalid_argument("unknown grid preset '" + name + "' (small|default|large)");
}

VerifyReport run_verification(const VerifyOptions& options) {
    const Grid grid = grid_for(options.preset);
    const std::vector<double> lambdas = {0.0, 0.5, 1.0, 1.5, 2.0};
    Tracker tracker(options.rtol);
    long points = 0;

    for (int tj : grid.twice_j) {
        const SpinSpace space(tj);
        const OperatorCache ops(space);
        for (double ea : grid.eta_abs) {
            for (double arg : grid.eta_arg) {
                const Complex eta = std::polar(ea, arg);
                const SpinState coherent = scs(space, eta);
                const Eigen::VectorXcd cv = coherent.vector();

                // coherent-state ladder identity J-|eta> = eta (2j - N)|eta>
                const Eigen::VectorXcd lhs1 = ops.jm * cv;
                const Eigen::VectorXcd rhs1 =
                    eta * (static_cast<double>(tj) * cv - ops.num * cv);
                tracker.record_residual("ladder_scs", (lhs1 - rhs1).norm());

                for (double theta : grid.theta) {
                    // every grid has |eta| >= 0.1, so no combination is degenerate
                    const SscsParams params{tj, eta, theta};
                    const SpinState state = sscs(space, params);
                    ++points;
                    const Eigen::VectorXcd v = state.vector();
                    auto expect = [&](const Eigen::MatrixXcd& m) { return v.dot(m * v); };

                    for (double lambda : lambdas)
                        tracker.record("G(lambda)", generating_function(params, lambda),
                                       oracle_lambda_moment(state, lambda));
                    for (int k = 1; k <= 4; ++k)
                        tracker.record("F" + std::to_string(k), factorial_moment(params, k),
                                       oracle_factorial_moment(state, k));

                    const NMoments nm = n_moments(params);
                    const double o1 = expect(ops.num).real();
                    const double o2 = expect(ops.num * ops.num).real();
                    const double o3 = expect(ops.num * ops.num * ops.num).real();
                    const double o4 = expect(ops.num * ops.num * ops.num * ops.num).real();
                    tracker.record("N1", nm.n1, o1);
                    tracker.record("N2", nm.n2, o2);
                    tracker.record("N3", nm.n3, o3);
                    tracker.record("N4", nm.n4, o4);

                    const Complex g2_oracle =
                        expect(ops.jp2jm2) / (expect(ops.jpjm) * expect(ops.jpjm));
                    tracker.record("g2", g2(params), g2_oracle.real());

                    const MomentSet m = cartesian_moments(params);
                    tracker.record("Jminus", m.jminus, expect(ops.jm));
                    tracker.record("Jminus2", m.jminus2, expect(ops.jm2));
                    tracker.record("Jx", m.jx, expect(ops.jx).real());
                    tracker.record("Jy", m.jy, expect(ops.jy).real());
                    tracker.record("Jz", m.jz, expect(ops.jz).real());
                    tracker.record("Jx2", m.jx2, expect(ops.jx2).real());
                    tracker.record("Jy2", m.jy2, expect(ops.jy2).real());
                    tracker.record("Jz2", m.jz2, expect(ops.jz2).real());

                    const XiTriple xi = xi_xyz_closedform(params);
                    compare_xi(tracker, "xi2_x", xi.x, xi_squared_oracle(state, kXAxis).xi2);
                    compare_xi(tracker, "xi2_y", xi.y, xi_squared_oracle(state, kYAxis).xi2);

                    // the cross-moment generating function against the
                    // partner state <eta,theta| lambda^N |eta,theta+pi>
                    const SscsParams partner{tj, eta, theta + kPi};
                    const SpinState partner_state = sscs(space, partner);
                    const Eigen::VectorXcd w = partner_state.vector();
                    for (double lambda : lambdas) {
                        Eigen::VectorXcd lw = w;
                        for (int n = 0; n < space.dimension(); ++n) lw(n) *= std::pow(lambda, n);
                        tracker.record("Gtilde(lambda)", gtilde(params, lambda), v.dot(lw));
                    }

                    // superposition ladder identities
                    const double xi2j = num::signed_pow(xi_param(eta), tj);
                    const double c = num::phase_of(theta).c;
                    const double ratio =
                        std::sqrt((1.0 - c * xi2j) / (1.0 + c * xi2j));
                    const Eigen::VectorXcd lhs2 = ops.jm * v;
                    const Eigen::VectorXcd rhs2 =
                        eta * ratio * (static_cast<double>(tj) * w - ops.num * w);
                    tracker.record_residual("ladder_cross", (lhs2 - rhs2).norm());

                    const Eigen::VectorXcd lhs3 = ops.jm2 * v;
                    Eigen::VectorXcd rhs3 = v;
                    for (int n = 0; n < space.dimension(); ++n)
                        rhs3(n) *= eta * eta * static_cast<double>(tj - n) *
                                   static_cast<double>(tj - n - 1);
                    tracker.record_residual("ladder_sq", (lhs3 - rhs3).norm());
                }
            }
        }
    }
    return tracker.finish(points);
}

}  // namespace spincat
