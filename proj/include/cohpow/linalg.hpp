#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cohpow {

using Complex = std::complex<double>;

// Shared numerical tolerances.
inline constexpr double kHermitianTol = 1e-10;   // max |A - A^dagger| entry
inline constexpr double kPsdFloor = -1e-10;      // eigenvalues below this are rejected
inline constexpr double kJacobiOffTol = 1e-12;   // off-diagonal Frobenius target
inline constexpr double kDirectionEps = 1e-12;   // below this a vector has no direction

/// Dense row-major complex matrix. Sized for small quantum systems
/// (dimensions up to ~16); all algorithms here are plain O(d^3).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

    const std::vector<Complex>& entries() const { return entries_; }

private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

std::vector<Complex> mat_vec(const ComplexMatrix& a, const std::vector<Complex>& v);

/// Kronecker product; entry (i*b.dim+k, j*b.dim+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double max_abs_entry(const ComplexMatrix& a);
/// max_ij |a(i,j) - conj(a(j,i))|
double hermiticity_deviation(const ComplexMatrix& a);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Plain real 3-vector used for Bloch-sphere directions.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm() const;
    Vec3 normalized() const;  // throws on near-zero input
    Vec3 operator-() const { return {-x, -y, -z}; }
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);

/// n.x * sigma_x + n.y * sigma_y + n.z * sigma_z
ComplexMatrix pauli_dot(const Vec3& n);

/// Result of a Hermitian eigendecomposition. Eigenvalues ascending,
/// eigenvectors stored as orthonormal columns. Column phases are fixed so
/// that the first component above kDirectionEps is real positive, which
/// makes the output deterministic for identical input.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi rotations. Rejects input whose hermiticity
/// deviation exceeds kHermitianTol (the measured asymmetry is reported in
/// the exception message). Converges to off-diagonal Frobenius norm below
/// kJacobiOffTol * max(1, |A|_F) within 100 sweeps for any sane input.
EigenDecomposition herm_eig(const ComplexMatrix& a);

/// Principal square root of a positive-semidefinite Hermitian matrix.
/// Eigenvalues in [kPsdFloor, 0) are clipped to zero before rooting;
/// anything below kPsdFloor is rejected.
ComplexMatrix sqrt_psd(const ComplexMatrix& a);

}  // namespace cohpow
