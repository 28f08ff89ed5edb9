#pragma once

#include <string>

#include "cohpow/linalg.hpp"

namespace cohpow {

/// Hermitian observable with a cached eigendecomposition. The eigenbasis is
/// what defines "incoherent" for the coherence measures; eigenvalues matter
/// only for the skew-information measure.
///
/// For a degenerate operator the eigenbasis is not unique. The matrix
/// constructor settles on the deterministic basis produced by herm_eig;
/// callers that need a specific basis (e.g. a product basis for a degenerate
/// tensor observable) construct from an explicit decomposition or use
/// Observable::tensor, which keeps the factor structure.
class Observable {
public:
    explicit Observable(ComplexMatrix k, std::string label = "");
    Observable(EigenDecomposition eig, std::string label);

    /// sigma . k_hat for a unit axis.
    static Observable pauli_axis(const Vec3& k_hat, std::string label = "");

    /// Product observable: basis = Kronecker products of the factor bases
    /// (columns re-sorted by ascending eigenvalue), eigenvalues = products.
    static Observable tensor(const Observable& a, const Observable& b, std::string label = "");

    std::size_t dim() const { return mat_.dim(); }
    const ComplexMatrix& matrix() const { return mat_; }
    const EigenDecomposition& eig() const { return eig_; }
    const std::string& label() const { return label_; }

    /// Column i of the eigenbasis as amplitudes.
    std::vector<Complex> basis_column(std::size_t i) const;

private:
    ComplexMatrix mat_;
    EigenDecomposition eig_;
    std::string label_;
};

}  // namespace cohpow
