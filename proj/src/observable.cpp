#include "cohpow/observable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cohpow {

namespace {

std::string axis_label(const Vec3& k) {
    std::ostringstream os;
    os << "axis(" << k.x << "," << k.y << "," << k.z << ")";
    return os.str();
}

void check_orthonormal(const ComplexMatrix& v) {
    const ComplexMatrix gram = dagger(v) * v;
    const ComplexMatrix delta = gram - ComplexMatrix::identity(v.dim());
    if (frobenius_norm(delta) > kHermitianTol)
        throw std::invalid_argument("Observable: eigenvector columns are not orthonormal");
}

}  // namespace

Observable::Observable(ComplexMatrix k, std::string label)
    : mat_(std::move(k)), eig_(herm_eig(mat_)), label_(std::move(label)) {}

Observable::Observable(EigenDecomposition eig, std::string label)
    : eig_(std::move(eig)), label_(std::move(label)) {
    const std::size_t d = eig_.eigenvectors.dim();
    if (eig_.eigenvalues.size() != d)
        throw std::invalid_argument("Observable: eigenvalue count does not match basis dimension");
    if (!std::is_sorted(eig_.eigenvalues.begin(), eig_.eigenvalues.end()))
        throw std::invalid_argument("Observable: eigenvalues must be ascending");
    check_orthonormal(eig_.eigenvectors);

    mat_ = ComplexMatrix(d);
    const ComplexMatrix& v = eig_.eigenvectors;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < d; ++k)
                acc += v(i, k) * eig_.eigenvalues[k] * std::conj(v(j, k));
            mat_(i, j) = acc;
        }
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c) {
            const Complex sym = 0.5 * (mat_(r, c) + std::conj(mat_(c, r)));
            mat_(r, c) = sym;
            mat_(c, r) = std::conj(sym);
        }
}

Observable Observable::pauli_axis(const Vec3& k_hat, std::string label) {
    if (std::abs(k_hat.norm() - 1.0) > kHermitianTol)
        throw std::invalid_argument("Observable::pauli_axis: axis must be a unit vector");
    return Observable(pauli_dot(k_hat), label.empty() ? axis_label(k_hat) : std::move(label));
}

Observable Observable::tensor(const Observable& a, const Observable& b, std::string label) {
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;

    EigenDecomposition eig;
    eig.eigenvectors = kron(a.eig_.eigenvectors, b.eig_.eigenvectors);
    std::vector<double> values(d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            values[i * db + j] = a.eig_.eigenvalues[i] * b.eig_.eigenvalues[j];

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&values](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    ComplexMatrix sorted(d);
    eig.eigenvalues.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        eig.eigenvalues[j] = values[order[j]];
        for (std::size_t i = 0; i < d; ++i) sorted(i, j) = eig.eigenvectors(i, order[j]);
    }
    eig.eigenvectors = std::move(sorted);

    if (label.empty()) label = a.label_ + "*" + b.label_;
    return Observable(std::move(eig), std::move(label));
}

std::vector<Complex> Observable::basis_column(std::size_t i) const {
    if (i >= dim()) throw std::out_of_range("Observable::basis_column: index out of range");
    std::vector<Complex> col(dim());
    for (std::size_t r = 0; r < dim(); ++r) col[r] = eig_.eigenvectors(r, i);
    return col;
}

}  // namespace cohpow
