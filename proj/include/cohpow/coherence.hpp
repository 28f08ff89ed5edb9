#pragma once

#include <string>

#include "cohpow/observable.hpp"
#include "cohpow/states.hpp"

namespace cohpow {

enum class Measure { L1, Skew };

const char* measure_name(Measure m);

/// A coherence number together with the measure and basis it refers to.
/// Values from the two measures are reported raw; no normalization is
/// applied to make them numerically comparable.
struct CoherenceValue {
    double value = 0.0;
    Measure measure = Measure::L1;
    std::string basis_label;
};

/// Sum of |rho_ij|, i != j, in the eigenbasis of k. Range [0, d-1]; zero
/// exactly for states diagonal in that basis. For a degenerate k this is a
/// function of the stored basis, not of the operator alone.
CoherenceValue c_l1(const DensityMatrix& rho, const Observable& k);

/// Qubit closed form r * sqrt(1 - (r_hat . k_hat)^2). Returns 0 when |r| is
/// below kDirectionEps.
CoherenceValue c_l1_qubit(const BlochVector& r, const Vec3& k_hat);

/// Skew information -1/2 tr([sqrt(rho), K]^2). Nonnegative; zero iff rho
/// commutes with K. Depends on K's eigenvalues, not just its basis.
CoherenceValue c_skew(const DensityMatrix& rho, const Observable& k);

/// Pure-state reduction of the skew measure: the variance <K^2> - <K>^2.
CoherenceValue c_skew_pure(const PureState& psi, const Observable& k);

/// Qubit closed form (1 - sqrt(1 - r^2)) (1 - (r_hat . k_hat)^2). Returns 0
/// when |r| is below kDirectionEps.
CoherenceValue c_skew_qubit(const BlochVector& r, const Vec3& k_hat);

}  // namespace cohpow
