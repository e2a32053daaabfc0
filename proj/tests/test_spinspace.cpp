#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "spincat/errors.hpp"
#include "spincat/spinspace.hpp"

using namespace spincat;

namespace {

SpinState random_state(const SpinSpace& space, std::mt19937& rng) {
    std::normal_distribution<double> dist;
    std::vector<Complex> amps(static_cast<std::size_t>(space.dimension()));
    for (auto& a : amps) a = Complex(dist(rng), dist(rng));
    return {space, std::move(amps)};
}

}  // namespace

TEST_CASE("space stores 2j exactly") {
    const SpinSpace half(1);
    CHECK(half.dimension() == 2);
    CHECK(half.j() == doctest::Approx(0.5));
    const SpinSpace five_halves(5);
    CHECK(five_halves.dimension() == 6);
    CHECK_THROWS_AS(SpinSpace(-1), std::invalid_argument);
    CHECK_THROWS_AS(SpinSpace(kMaxTwiceJ + 1), std::invalid_argument);
}

TEST_CASE("number states") {
    const SpinSpace space(2);  // j = 1
    const SpinState ground = number_state(space, 0);
    CHECK(ground.amplitude(0) == Complex(1.0, 0.0));
    CHECK(ground.amplitude(1) == Complex(0.0, 0.0));
    CHECK(ground.amplitude(2) == Complex(0.0, 0.0));

    const SpinSpace big(6);  // j = 3
    CHECK(expectation(number_state(big, 4), op_number(big)).real() == doctest::Approx(4.0));

    const SpinSpace five_halves(5);
    CHECK_THROWS_AS(number_state(five_halves, 6), std::out_of_range);
    CHECK_THROWS_AS(number_state(five_halves, -1), std::out_of_range);
}

TEST_CASE("lowering operator matrix elements") {
    // j = 1/2: a single unit entry |1> -> |0>
    const SpinSpace half(1);
    const auto jm_half = op_jminus(half).matrix();
    CHECK(jm_half(0, 1) == Complex(1.0, 0.0));
    CHECK(jm_half.cwiseAbs().sum() == doctest::Approx(1.0));

    // j = 1: J-|2> = sqrt(2)|1>, J-|1> = sqrt(2)|0>
    const SpinSpace one(2);
    const auto jm = op_jminus(one).matrix();
    CHECK(jm(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(jm(0, 1).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    // J+ is exactly the conjugate transpose of J-
    for (int tj : {1, 2, 5, 11}) {
        const SpinSpace space(tj);
        CHECK((op_jplus(space).matrix() - op_jminus(space).matrix().adjoint())
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
}

TEST_CASE("su(2) algebra and Casimir") {
    for (int tj = 1; tj <= 60; ++tj) {
        const SpinSpace space(tj);
        const auto jx = op_jx(space).matrix();
        const auto jy = op_jy(space).matrix();
        const auto jz = op_jz(space).matrix();
        const Complex i(0.0, 1.0);

        CHECK((jx * jy - jy * jx - i * jz).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((jy * jz - jz * jy - i * jx).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((jz * jx - jx * jz - i * jy).cwiseAbs().maxCoeff() < 1e-12);

        const double j = space.j();
        const Eigen::MatrixXcd casimir = jx * jx + jy * jy + jz * jz;
        const Eigen::MatrixXcd expected =
            j * (j + 1.0) * Eigen::MatrixXcd::Identity(space.dimension(), space.dimension());
        CHECK((casimir - expected).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("jz is number minus j and Hermitian constructors are exact") {
    const SpinSpace space(7);
    const Eigen::MatrixXcd delta =
        op_jz(space).matrix() -
        (op_number(space).matrix() -
         space.j() * Eigen::MatrixXcd::Identity(space.dimension(), space.dimension()));
    CHECK(delta.cwiseAbs().maxCoeff() == 0.0);
    for (auto op : {op_jx(space), op_jy(space), op_jz(space), op_number(space)})
        CHECK((op.matrix() - op.matrix().adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("apply") {
    const SpinSpace space(4);
    std::mt19937 rng(7);
    const SpinState state = random_state(space, rng);

    const Eigen::VectorXcd same = apply(op_identity(space), state);
    for (int n = 0; n < space.dimension(); ++n) CHECK(same(n) == state.amplitude(n));

    const SpinState basis = number_state(space, 3);
    const Eigen::VectorXcd scaled = apply(op_number(space), basis);
    CHECK(std::abs(scaled(3) - Complex(3.0, 0.0)) < 1e-15);

    CHECK(apply(op_jminus(space), number_state(space, 0)).norm() == 0.0);

    const SpinSpace other(5);
    CHECK_THROWS_AS(apply(op_jminus(other), state), SpaceMismatchError);
}

TEST_CASE("expectation, variance, inner") {
    const SpinSpace one(2);
    CHECK(expectation(number_state(one, 0), op_jz(one)).real() == doctest::Approx(-1.0));

    for (int n = 0; n <= 2; ++n)
        CHECK(variance(number_state(one, n), op_jz(one)) == doctest::Approx(0.0));

    // Casimir expectation on arbitrary normalized states, j = 3
    const SpinSpace three(6);
    const SpinOperator casimir = op_jx(three) * op_jx(three) + op_jy(three) * op_jy(three) +
                                 op_jz(three) * op_jz(three);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const SpinState state = random_state(three, rng);
        CHECK(expectation(state, casimir).real() == doctest::Approx(12.0).epsilon(1e-12));
        CHECK(std::abs(expectation(state, casimir).imag()) < 1e-12);
        CHECK(std::abs(expectation(state, op_jx(three)).imag()) < 1e-12);
    }

    CHECK_THROWS_AS(variance(random_state(three, rng), op_jminus(three)), NonHermitianError);

    const SpinState a = number_state(one, 0);
    const SpinState b = number_state(one, 1);
    CHECK(inner(a, b) == Complex(0.0, 0.0));
    // conjugate-linear in the first argument
    const SpinState c(one, {Complex(0.0, 1.0), Complex(0.0, 0.0), Complex(0.0, 0.0)});
    CHECK(std::abs(inner(c, a) - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(inner(a, c) - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("normalization of constructors") {
    const SpinSpace space(9);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const SpinState state = random_state(space, rng);
        double norm2 = 0.0;
        for (const auto& a : state.amplitudes()) norm2 += std::norm(a);
        CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(SpinState(space, std::vector<Complex>(3)), std::invalid_argument);
    CHECK_THROWS_AS(SpinState(space, std::vector<Complex>(10)), std::invalid_argument);
}
