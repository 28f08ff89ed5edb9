#include "cohpow/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cohpow {

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        std::ostringstream msg;
        msg << "ComplexMatrix: entry count " << entries_.size()
            << " does not match dim " << dim_ << " (expected " << dim_ * dim_ << ")";
        throw std::invalid_argument(msg.str());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matrix add");
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim() * a.dim(); ++i)
        out(i / a.dim(), i % a.dim()) = a.entries()[i] + b.entries()[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matrix subtract");
    ComplexMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim() * a.dim(); ++i)
        out(i / a.dim(), i % a.dim()) = a.entries()[i] - b.entries()[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matrix product");
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = s * a(r, c);
    return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0.0) * a; }

std::vector<Complex> mat_vec(const ComplexMatrix& a, const std::vector<Complex>& v) {
    if (v.size() != a.dim()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Complex> out(a.dim(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) out(c, r) = std::conj(a(r, c));
    return out;
}

Complex trace(const ComplexMatrix& a) {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& e : a.entries()) s += std::norm(e);
    return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& e : a.entries()) m = std::max(m, std::abs(e));
    return m;
}

double hermiticity_deviation(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
    return m;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

ComplexMatrix pauli_y() {
    return ComplexMatrix(2, {Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0, 0.0)});
}

ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (n < kDirectionEps) throw std::invalid_argument("Vec3::normalized: vector has no direction");
    return {x / n, y / n, z / n};
}

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }

ComplexMatrix pauli_dot(const Vec3& n) {
    ComplexMatrix m(2);
    m(0, 0) = Complex(n.z, 0.0);
    m(0, 1) = Complex(n.x, -n.y);
    m(1, 0) = Complex(n.x, n.y);
    m(1, 1) = Complex(-n.z, 0.0);
    return m;
}

namespace {

double off_diagonal_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// One Jacobi rotation on the (p,q) plane: A <- J^dagger A J and V <- V J with
//   J[p][p] = c, J[p][q] = -s e^{i phi}, J[q][p] = s e^{-i phi}, J[q][q] = c
// where phi = arg A(p,q). The rotation angle satisfies |t| <= 1, which keeps
// the cyclic sweep convergent.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;
    const double theta = (a(p, p).real() - a(q, q).real()) / (2.0 * mag);
    const double sign = theta >= 0.0 ? 1.0 : -1.0;
    const double t = sign / (std::abs(theta) + std::hypot(theta, 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t d = a.dim();
    // columns: B = A J
    for (std::size_t k = 0; k < d; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + s * std::conj(phase) * akq;
        a(k, q) = -s * phase * akp + c * akq;
    }
    // rows: A' = J^dagger B
    for (std::size_t k = 0; k < d; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + s * phase * aqk;
        a(q, k) = -s * std::conj(phase) * apk + c * aqk;
    }
    a(p, q) = Complex(0.0, 0.0);
    a(q, p) = Complex(0.0, 0.0);
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    for (std::size_t k = 0; k < d; ++k) {
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp + s * std::conj(phase) * vkq;
        v(k, q) = -s * phase * vkp + c * vkq;
    }
}

void fix_column_phases(ComplexMatrix& v) {
    for (std::size_t j = 0; j < v.dim(); ++j) {
        for (std::size_t i = 0; i < v.dim(); ++i) {
            const double mag = std::abs(v(i, j));
            if (mag > kDirectionEps) {
                const Complex factor = std::conj(v(i, j)) / mag;
                for (std::size_t k = 0; k < v.dim(); ++k) v(k, j) *= factor;
                break;
            }
        }
    }
}

}  // namespace

EigenDecomposition herm_eig(const ComplexMatrix& input) {
    const std::size_t d = input.dim();
    if (d == 0) throw std::invalid_argument("herm_eig: empty matrix");
    const double asym = hermiticity_deviation(input);
    if (asym > kHermitianTol) {
        std::ostringstream msg;
        msg << "herm_eig: input is not Hermitian, max |A - A^dagger| entry = " << asym;
        throw std::invalid_argument(msg.str());
    }

    ComplexMatrix a(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));
    ComplexMatrix v = ComplexMatrix::identity(d);

    const double tol = kJacobiOffTol * std::max(1.0, frobenius_norm(a));
    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_frobenius(a) <= tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) jacobi_rotate(a, v, p, q);
    }
    if (!converged && off_diagonal_frobenius(a) > tol)
        throw std::runtime_error("herm_eig: Jacobi sweeps did not converge");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(d);
    out.eigenvectors = ComplexMatrix(d);
    for (std::size_t j = 0; j < d; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < d; ++i) out.eigenvectors(i, j) = v(i, order[j]);
    }
    fix_column_phases(out.eigenvectors);
    return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& a) {
    EigenDecomposition eig = herm_eig(a);
    for (double lambda : eig.eigenvalues) {
        if (lambda < kPsdFloor) {
            std::ostringstream msg;
            msg << "sqrt_psd: matrix is not positive semidefinite, eigenvalue " << lambda;
            throw std::invalid_argument(msg.str());
        }
    }

    // Eigenvalues at round-off scale are treated as exact zeros. sqrt has
    // infinite slope at 0, so rooting +1e-16 noise of a singular input would
    // inject a 1e-8 error into the result.
    const double noise_floor = 1e-13 * std::max(1.0, frobenius_norm(a));

    const std::size_t d = a.dim();
    const ComplexMatrix& v = eig.eigenvectors;
    ComplexMatrix s(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < d; ++k) {
                const double lambda = eig.eigenvalues[k];
                const double root = lambda <= noise_floor ? 0.0 : std::sqrt(lambda);
                acc += v(i, k) * root * std::conj(v(j, k));
            }
            s(i, j) = acc;
        }
    // remove the last round-off asymmetry
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = r; c < d; ++c) {
            const Complex sym = 0.5 * (s(r, c) + std::conj(s(c, r)));
            s(r, c) = sym;
            s(c, r) = std::conj(sym);
        }
    return s;
}

}  // namespace cohpow
