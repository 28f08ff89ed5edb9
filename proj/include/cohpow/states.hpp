#pragma once

#include <vector>

#include "cohpow/linalg.hpp"
#include "cohpow/observable.hpp"

namespace cohpow {

/// Qubit Bloch vector, |r| <= 1 (pure states sit on the unit sphere).
class BlochVector {
public:
    BlochVector(double x, double y, double z);
    explicit BlochVector(const Vec3& r);

    const Vec3& vec() const { return r_; }
    double norm() const { return r_.norm(); }

    /// r / |r|; only defined when |r| > kDirectionEps.
    Vec3 unit_direction() const;

private:
    Vec3 r_;
};

/// Normalized pure state, stored as amplitudes in the computational basis.
class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes);

    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    const Complex& amp(std::size_t i) const { return amps_[i]; }

private:
    std::vector<Complex> amps_;
};

/// Trace-one positive-semidefinite Hermitian matrix. Construction validates
/// all three invariants (hermiticity 1e-10, trace 1e-10, eigenvalues above
/// kPsdFloor).
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix from_pure(const PureState& psi);

    std::size_t dim() const { return mat_.dim(); }
    const ComplexMatrix& matrix() const { return mat_; }

private:
    ComplexMatrix mat_;
};

/// rho = (I + r . sigma) / 2
DensityMatrix density_from_bloch(const BlochVector& r);

/// r_i = Re tr(rho sigma_i); qubit only.
BlochVector bloch_from_density(const DensityMatrix& rho);

/// (1/sqrt(d)) sum_j e^{i phi_j} |k_j>, with phi_0 pinned to 0 so `phases`
/// carries the remaining d-1 relative phases. Saturates the l1 coherence
/// bound d-1 in the given basis.
PureState max_coherent_state(const Observable& basis, const std::vector<double>& phases);

/// (1/sqrt(2)) (|k+> + e^{i omega} |k->): the pure states whose Bloch vector
/// lies on the equator perpendicular to k_hat. |k+-> follow the herm_eig
/// phase convention (first nonzero component real positive).
PureState equatorial_state(const Vec3& k_hat, double omega);

}  // namespace cohpow
