#include "cohpow/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cohpow {

namespace {

constexpr double kBlochNormSlack = 1e-10;
constexpr double kPureNormTol = 1e-12;
constexpr double kTraceTol = 1e-10;

}  // namespace

BlochVector::BlochVector(double x, double y, double z) : BlochVector(Vec3{x, y, z}) {}

BlochVector::BlochVector(const Vec3& r) : r_(r) {
    if (r_.norm() > 1.0 + kBlochNormSlack) {
        std::ostringstream msg;
        msg << "BlochVector: |r| = " << r_.norm() << " exceeds 1";
        throw std::invalid_argument(msg.str());
    }
}

Vec3 BlochVector::unit_direction() const { return r_.normalized(); }

PureState::PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw std::invalid_argument("PureState: empty amplitude vector");
    double n2 = 0.0;
    for (const Complex& a : amps_) n2 += std::norm(a);
    const double n = std::sqrt(n2);
    if (std::abs(n - 1.0) > kPureNormTol) {
        std::ostringstream msg;
        msg << "PureState: norm " << n << " is not 1";
        throw std::invalid_argument(msg.str());
    }
    for (Complex& a : amps_) a /= n;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (mat_.dim() == 0) throw std::invalid_argument("DensityMatrix: empty matrix");
    const double asym = hermiticity_deviation(mat_);
    if (asym > kHermitianTol) {
        std::ostringstream msg;
        msg << "DensityMatrix: not Hermitian, max |A - A^dagger| entry = " << asym;
        throw std::invalid_argument(msg.str());
    }
    const Complex tr = trace(mat_);
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace " << tr.real() << " is not 1";
        throw std::invalid_argument(msg.str());
    }
    const EigenDecomposition eig = herm_eig(mat_);
    for (double lambda : eig.eigenvalues) {
        if (lambda < kPsdFloor) {
            std::ostringstream msg;
            msg << "DensityMatrix: negative eigenvalue " << lambda;
            throw std::invalid_argument(msg.str());
        }
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = psi.amp(i) * std::conj(psi.amp(j));
    return DensityMatrix(std::move(m));
}

DensityMatrix density_from_bloch(const BlochVector& r) {
    const Vec3& v = r.vec();
    ComplexMatrix m(2);
    m(0, 0) = Complex(0.5 * (1.0 + v.z), 0.0);
    m(0, 1) = Complex(0.5 * v.x, -0.5 * v.y);
    m(1, 0) = Complex(0.5 * v.x, 0.5 * v.y);
    m(1, 1) = Complex(0.5 * (1.0 - v.z), 0.0);
    return DensityMatrix(std::move(m));
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("bloch_from_density: qubit state required");
    const ComplexMatrix& m = rho.matrix();
    const double x = trace(m * pauli_x()).real();
    const double y = trace(m * pauli_y()).real();
    const double z = trace(m * pauli_z()).real();
    return BlochVector(x, y, z);
}

PureState max_coherent_state(const Observable& basis, const std::vector<double>& phases) {
    const std::size_t d = basis.dim();
    if (phases.size() + 1 != d) {
        std::ostringstream msg;
        msg << "max_coherent_state: expected " << d - 1 << " phases, got " << phases.size();
        throw std::invalid_argument(msg.str());
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Complex> amps(d, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < d; ++j) {
        const Complex w = j == 0 ? Complex(scale, 0.0)
                                 : scale * std::exp(Complex(0.0, phases[j - 1]));
        for (std::size_t i = 0; i < d; ++i) amps[i] += w * basis.eig().eigenvectors(i, j);
    }
    return PureState(std::move(amps));
}

PureState equatorial_state(const Vec3& k_hat, double omega) {
    if (std::abs(k_hat.norm() - 1.0) > kHermitianTol)
        throw std::invalid_argument("equatorial_state: k_hat must be a unit vector");
    const EigenDecomposition eig = herm_eig(pauli_dot(k_hat));
    // ascending order: column 0 is |k->, column 1 is |k+>
    const Complex w = std::exp(Complex(0.0, omega));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(2);
    for (std::size_t i = 0; i < 2; ++i)
        amps[i] = inv_sqrt2 * (eig.eigenvectors(i, 1) + w * eig.eigenvectors(i, 0));
    return PureState(std::move(amps));
}

}  // namespace cohpow
