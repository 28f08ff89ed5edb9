#include "cohpow/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cohpow {

namespace {

constexpr double kTracePreservingTol = 1e-10;

void check_probability(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream msg;
        msg << who << ": p = " << p << " is outside [0, 1]";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Channel::Channel(std::vector<ComplexMatrix> kraus, std::string label,
                 std::map<std::string, double> params)
    : kraus_(std::move(kraus)), label_(std::move(label)), params_(std::move(params)) {
    if (kraus_.empty()) throw std::invalid_argument("Channel: empty Kraus list");
    const std::size_t d = kraus_.front().dim();
    if (d == 0) throw std::invalid_argument("Channel: zero-dimensional Kraus operator");
    for (const ComplexMatrix& k : kraus_)
        if (k.dim() != d) throw std::invalid_argument("Channel: Kraus operators differ in dimension");

    ComplexMatrix sum(d);
    for (const ComplexMatrix& k : kraus_) sum = sum + dagger(k) * k;
    const double dev = frobenius_norm(sum - ComplexMatrix::identity(d));
    if (dev > kTracePreservingTol) {
        std::ostringstream msg;
        msg << "Channel '" << label_ << "': not trace preserving, |sum K^dagger K - I|_F = " << dev;
        throw std::invalid_argument(msg.str());
    }
}

double Channel::param(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end())
        throw std::invalid_argument("Channel::param: no parameter named '" + name + "'");
    return it->second;
}

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho) {
    if (ch.dim() != rho.dim()) {
        std::ostringstream msg;
        msg << "apply: channel dim " << ch.dim() << " does not match state dim " << rho.dim();
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix out(ch.dim());
    for (const ComplexMatrix& k : ch.kraus()) out = out + k * rho.matrix() * dagger(k);
    return DensityMatrix(std::move(out));
}

PureState apply_unitary(const Channel& ch, const PureState& psi) {
    if (ch.kraus().size() != 1)
        throw std::invalid_argument("apply_unitary: channel has more than one Kraus operator");
    if (ch.dim() != psi.dim()) throw std::invalid_argument("apply_unitary: dimension mismatch");
    return PureState(mat_vec(ch.kraus().front(), psi.amplitudes()));
}

Channel identity_channel(std::size_t dim) {
    return Channel({ComplexMatrix::identity(dim)}, "identity");
}

Channel unitary_rotation(const Vec3& n_hat, double theta) {
    if (std::abs(n_hat.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("unitary_rotation: axis must be a unit vector");
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const ComplexMatrix u = c * ComplexMatrix::identity(2) + Complex(0.0, s) * pauli_dot(n_hat);
    return Channel({u}, "unitary",
                   {{"theta", theta}, {"nx", n_hat.x}, {"ny", n_hat.y}, {"nz", n_hat.z}});
}

Channel hadamard() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(2, {inv_sqrt2, inv_sqrt2, -inv_sqrt2, inv_sqrt2});
    return Channel({std::move(h)}, "hadamard");
}

Channel depolarizing(double p) {
    check_probability(p, "depolarizing");
    const double w0 = std::sqrt(std::max(0.0, 1.0 - 0.75 * p));
    const double w = 0.5 * std::sqrt(p);
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(w0 * ComplexMatrix::identity(2));
    kraus.push_back(w * pauli_x());
    kraus.push_back(w * pauli_y());
    kraus.push_back(w * pauli_z());
    return Channel(std::move(kraus), "depolarizing", {{"p", p}});
}

Channel bit_flip(double p) {
    check_probability(p, "bit_flip");
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - p) * ComplexMatrix::identity(2));
    kraus.push_back(std::sqrt(p) * pauli_x());
    return Channel(std::move(kraus), "bitflip", {{"p", p}});
}

Channel phase_flip(double p) {
    check_probability(p, "phase_flip");
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(std::sqrt(1.0 - p) * ComplexMatrix::identity(2));
    kraus.push_back(std::sqrt(p) * pauli_z());
    return Channel(std::move(kraus), "phaseflip", {{"p", p}});
}

Channel cnot() {
    ComplexMatrix u(4);
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    u(2, 3) = 1.0;
    u(3, 2) = 1.0;
    return Channel({std::move(u)}, "cnot");
}

Channel tensor(const std::vector<Channel>& factors) {
    if (factors.empty()) throw std::invalid_argument("tensor: empty factor list");
    std::vector<ComplexMatrix> kraus = factors.front().kraus();
    std::string label = factors.front().label();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        std::vector<ComplexMatrix> next;
        next.reserve(kraus.size() * factors[i].kraus().size());
        for (const ComplexMatrix& a : kraus)
            for (const ComplexMatrix& b : factors[i].kraus()) next.push_back(kron(a, b));
        kraus = std::move(next);
        label += "*" + factors[i].label();
    }
    return Channel(std::move(kraus), "tensor(" + label + ")");
}

Channel compose(const Channel& after, const Channel& before) {
    if (after.dim() != before.dim()) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(after.kraus().size() * before.kraus().size());
    for (const ComplexMatrix& a : after.kraus())
        for (const ComplexMatrix& b : before.kraus()) kraus.push_back(a * b);
    return Channel(std::move(kraus), "compose(" + after.label() + "," + before.label() + ")");
}

Vec3 BlochAffineMap::operator()(const Vec3& r) const {
    return {linear[0][0] * r.x + linear[0][1] * r.y + linear[0][2] * r.z + shift.x,
            linear[1][0] * r.x + linear[1][1] * r.y + linear[1][2] * r.z + shift.y,
            linear[2][0] * r.x + linear[2][1] * r.y + linear[2][2] * r.z + shift.z};
}

BlochAffineMap bloch_map(const Channel& ch) {
    if (ch.dim() != 2) throw std::invalid_argument("bloch_map: qubit channel required");
    BlochAffineMap map;
    map.shift = bloch_from_density(apply(ch, density_from_bloch(BlochVector(0, 0, 0)))).vec();
    const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int j = 0; j < 3; ++j) {
        const Vec3 image = bloch_from_density(apply(ch, density_from_bloch(BlochVector(axes[j])))).vec();
        map.linear[0][j] = image.x - map.shift.x;
        map.linear[1][j] = image.y - map.shift.y;
        map.linear[2][j] = image.z - map.shift.z;
    }
    return map;
}

}  // namespace cohpow
