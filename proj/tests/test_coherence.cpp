#include <doctest.h>

#include <cmath>

#include "cohpow/coherence.hpp"
#include "cohpow/verify.hpp"
#include "test_util.hpp"

using namespace cohpow;
using cohpow::test::entry_distance;

namespace {

Observable computational_basis(std::size_t d) {
    EigenDecomposition eig;
    eig.eigenvectors = ComplexMatrix::identity(d);
    eig.eigenvalues.resize(d);
    for (std::size_t i = 0; i < d; ++i) eig.eigenvalues[i] = static_cast<double>(i);
    return Observable(std::move(eig), "computational");
}

DensityMatrix plus_state() { return density_from_bloch(BlochVector(1, 0, 0)); }

}  // namespace

TEST_CASE("c_l1 on reference states") {
    const Observable kz(pauli_z(), "z");

    verify::Rng rng(31);
    const DensityMatrix diagonal = rng.random_incoherent(kz);
    CHECK(c_l1(diagonal, kz).value < 1e-12);

    CHECK(c_l1(plus_state(), kz).value == doctest::Approx(1.0).epsilon(1e-12));

    // uniform 4-state superposition reaches the bound d - 1 = 3
    const PureState uniform({0.5, 0.5, 0.5, 0.5});
    CHECK(c_l1(DensityMatrix::from_pure(uniform), computational_basis(4)).value ==
          doctest::Approx(3.0).epsilon(1e-12));

    CHECK_THROWS_AS(c_l1(plus_state(), computational_basis(4)), std::invalid_argument);
}

TEST_CASE("c_l1 equals the total entry sum minus one") {
    verify::Rng rng(32);
    const Observable kz(pauli_z(), "z");
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = rng.random_density(2);
        double total = 0.0;
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) total += std::abs(rho.matrix()(r, c));
        CHECK(c_l1(rho, kz).value == doctest::Approx(total - 1.0).epsilon(1e-10));
    }
}

TEST_CASE("c_l1_qubit closed form") {
    CHECK(c_l1_qubit(BlochVector(1, 0, 0), {0, 0, 1}).value == doctest::Approx(1.0));
    CHECK(c_l1_qubit(BlochVector(0, 0, 0.7), {0, 0, 1}).value == doctest::Approx(0.0));
    CHECK(c_l1_qubit(BlochVector(0.6, 0, 0), {0, 0, 1}).value == doctest::Approx(0.6));

    // agrees with the basis-transform implementation
    const Observable kz(pauli_z(), "z");
    CHECK(std::abs(c_l1_qubit(BlochVector(0.6, 0, 0), {0, 0, 1}).value -
                   c_l1(density_from_bloch(BlochVector(0.6, 0, 0)), kz).value) < 1e-12);
}

TEST_CASE("c_skew on reference states") {
    const Observable kz(pauli_z(), "z");

    const DensityMatrix mixed = density_from_bloch(BlochVector(0, 0, 0));
    CHECK(c_skew(mixed, kz).value == doctest::Approx(0.0));

    CHECK(c_skew(plus_state(), kz).value == doctest::Approx(1.0).epsilon(1e-12));

    // (I + 0.6 sigma_x)/2 against sigma_z: exact value 0.2.
    // Independent route: sqrt(rho) = a I + b sigma_x with a = (sqrt(.8)+sqrt(.2))/2,
    // b = (sqrt(.8)-sqrt(.2))/2, so -tr([sqrt(rho), sigma_z]^2)/2 = 4 b^2 = 0.2.
    const DensityMatrix tilted = density_from_bloch(BlochVector(0.6, 0, 0));
    CHECK(c_skew(tilted, kz).value == doctest::Approx(0.2).epsilon(1e-12));
    const double b = 0.5 * (std::sqrt(0.8) - std::sqrt(0.2));
    CHECK(4.0 * b * b == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("c_skew_pure reference states") {
    const Observable kz(pauli_z(), "z");
    CHECK(c_skew_pure(PureState({1.0, 0.0}), kz).value == doctest::Approx(0.0));

    const double s = 1.0 / std::sqrt(2.0);
    CHECK(c_skew_pure(PureState({s, s}), kz).value == doctest::Approx(1.0));

    // Bell state against sigma_x * sigma_z
    const Observable kxz =
        Observable::tensor(Observable(pauli_x(), "x"), Observable(pauli_z(), "z"), "x*z");
    const PureState bell({s, 0.0, 0.0, s});
    CHECK(c_skew_pure(bell, kxz).value == doctest::Approx(1.0).epsilon(1e-12));

    // matches the density-matrix route
    verify::Rng rng(33);
    for (int i = 0; i < 20; ++i) {
        const PureState psi = rng.random_pure(3);
        const Observable k(rng.random_hermitian(3));
        CHECK(std::abs(c_skew_pure(psi, k).value - c_skew(DensityMatrix::from_pure(psi), k).value) <
              1e-10);
    }
}

TEST_CASE("c_skew_qubit closed form") {
    CHECK(c_skew_qubit(BlochVector(0, 0, 0), {0, 0, 1}).value == 0.0);
    CHECK(c_skew_qubit(BlochVector(1, 0, 0), {0, 0, 1}).value == doctest::Approx(1.0));
    CHECK(c_skew_qubit(BlochVector(0.6, 0, 0), {0, 0, 1}).value == doctest::Approx(0.2));
}

TEST_CASE("degenerate observables: the stored basis decides the l1 value") {
    const double s = 1.0 / std::sqrt(2.0);
    const PureState bell({s, 0.0, 0.0, s});
    const DensityMatrix rho = DensityMatrix::from_pure(bell);

    // built from the matrix: herm_eig picks the Bell-type eigenbasis of
    // sigma_x * sigma_x, in which this state is incoherent
    const Observable from_matrix(kron(pauli_x(), pauli_x()), "xx-matrix");
    CHECK(c_l1(rho, from_matrix).value < 1e-12);

    // built as a product observable: the |+->-product basis is kept and the
    // same state shows coherence 1
    const Observable from_tensor =
        Observable::tensor(Observable(pauli_x(), "x"), Observable(pauli_x(), "x"), "x*x");
    CHECK(c_l1(rho, from_tensor).value == doctest::Approx(1.0).epsilon(1e-10));

    // the operators themselves agree
    CHECK(entry_distance(from_matrix.matrix(), from_tensor.matrix()) < 1e-12);
}

TEST_CASE("observable construction validation") {
    EigenDecomposition eig;
    eig.eigenvectors = ComplexMatrix::identity(2);
    eig.eigenvalues = {1.0, -1.0};  // not ascending
    CHECK_THROWS_AS(Observable(std::move(eig), "bad"), std::invalid_argument);

    EigenDecomposition skewed;
    skewed.eigenvectors = ComplexMatrix(2, {1.0, 1.0, 0.0, 1.0});  // not orthonormal
    skewed.eigenvalues = {0.0, 1.0};
    CHECK_THROWS_AS(Observable(std::move(skewed), "bad"), std::invalid_argument);

    CHECK_THROWS_AS(Observable::pauli_axis({0, 0, 2}), std::invalid_argument);
}
