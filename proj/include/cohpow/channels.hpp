#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cohpow/states.hpp"

namespace cohpow {

/// Completely positive trace-preserving map in Kraus form:
/// rho -> sum_n K_n rho K_n^dagger with sum_n K_n^dagger K_n = I.
/// Trace preservation is validated at construction (1e-10 Frobenius).
class Channel {
public:
    Channel(std::vector<ComplexMatrix> kraus, std::string label = "kraus",
            std::map<std::string, double> params = {});

    std::size_t dim() const { return kraus_.front().dim(); }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    const std::string& label() const { return label_; }
    const std::map<std::string, double>& params() const { return params_; }

    double param(const std::string& name) const;  // throws if absent

private:
    std::vector<ComplexMatrix> kraus_;
    std::string label_;
    std::map<std::string, double> params_;
};

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho);

/// Unitary channels keep pure states pure; single-Kraus channels only.
PureState apply_unitary(const Channel& ch, const PureState& psi);

Channel identity_channel(std::size_t dim = 2);

/// U = cos(theta/2) I + i sin(theta/2) n_hat . sigma — a rotation of the
/// Bloch sphere around n_hat by theta.
Channel unitary_rotation(const Vec3& n_hat, double theta);

/// (1/sqrt(2)) [[1, 1], [-1, 1]]: the pi/2 rotation around y.
Channel hadamard();

/// rho -> (1-p) rho + p I/2, via the four-Pauli Kraus set.
Channel depolarizing(double p);

/// rho -> (1-p) rho + p sigma_x rho sigma_x
Channel bit_flip(double p);

/// rho -> (1-p) rho + p sigma_z rho sigma_z
Channel phase_flip(double p);

/// |i,j> -> |i, i xor j> on two qubits (left factor controls).
Channel cnot();

/// Kraus set = all Kronecker products of the factor Kraus operators.
Channel tensor(const std::vector<Channel>& factors);

/// Sequential composition: (after . before)(rho) = after(before(rho)).
Channel compose(const Channel& after, const Channel& before);

/// Qubit channel as an affine map on Bloch vectors: r -> linear r + shift.
struct BlochAffineMap {
    std::array<std::array<double, 3>, 3> linear{};
    Vec3 shift;

    Vec3 operator()(const Vec3& r) const;
};

/// Extracted by probing the channel with I/2 and the three Pauli directions.
BlochAffineMap bloch_map(const Channel& ch);

}  // namespace cohpow
