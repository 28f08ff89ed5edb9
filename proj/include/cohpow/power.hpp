#pragma once

#include <optional>
#include <vector>

#include "cohpow/channels.hpp"
#include "cohpow/coherence.hpp"
#include "cohpow/oracle.hpp"

namespace cohpow {

enum class PowerMethod { ClosedForm, DiscreteMax, NumericMin };

const char* power_method_name(PowerMethod m);

/// A cohering or decohering power together with the optimizing input:
/// basis index of the argmax state for cohering powers, the argmin phase
/// vector for decohering powers.
struct PowerResult {
    double value = 0.0;
    Measure measure = Measure::Skew;
    PowerMethod method = PowerMethod::DiscreteMax;
    int witness_index = -1;
    std::vector<double> witness_phases;
};

/// Raised for (measure, dimension) combinations this library does not
/// evaluate; front ends map it to a dedicated exit code.
class UnsupportedCombination : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Cohering power: the maximum output coherence over incoherent inputs,
/// which reduces to a discrete max over the d eigenstates of k. Ties break
/// toward the lowest basis index.
PowerResult cohering_power(const Channel& ch, const Observable& k, Measure measure);

/// Decohering power: max coherence minus the minimum output coherence over
/// the maximally coherent states, parametrized as a (d-1)-phase torus over
/// the k basis. Supported: both measures for d = 2 (skew needs a
/// nondegenerate k), L1 only for 2 < d <= 4. The skew-maximal set is not
/// characterized for d > 2, so that combination is refused rather than
/// guessed.
PowerResult decohering_power(const Channel& ch, const Observable& k, Measure measure,
                             const SearchConfig& cfg = SearchConfig::circle());

/// F(m_hat, k_hat) = (1 - sqrt(1 - |m'|^2)) (1 - (m'_hat . k_hat)^2): the
/// output skew coherence of a qubit channel for the pure input m_hat.
/// Defined as 0 when |m'| < kDirectionEps (the output is maximally mixed).
double f_function(const Channel& ch, const Vec3& m_hat, const Vec3& k_hat);

/// Qubit skew cohering power via the two-fold max {F(k,k), F(-k,k)}.
PowerResult cohering_power_qubit(const Channel& ch, const Vec3& k_hat);

/// 1 - [cos(theta) + (1 - cos(theta)) (k . n)^2]^2
double unitary_cohering_closed(const Vec3& n_hat, double theta, const Vec3& k_hat);

struct UnitaryPowerEquality {
    double cohering = 0.0;    // closed form
    double decohering = 0.0;  // circle-search numeric
    double gap = 0.0;
};

/// Unitary qubit channels have equal cohering and decohering power in any
/// basis; this returns both routes and their gap for certification.
UnitaryPowerEquality unitary_power_equality(const Vec3& n_hat, double theta, const Vec3& k_hat,
                                            const SearchConfig& cfg = SearchConfig::circle());

/// sqrt(1 - (1-p)^2)
double depolarizing_decohering_closed(double p);

/// (1 - sqrt(4p(1-p)(1-eta))) * 4 p^2 eta (1-eta) / (1 - 4p(1-p)(1-eta))
/// with eta = (k . x)^2. Removable singularities (eta (1-eta) = 0 with a
/// vanishing denominator) evaluate to their limit 0.
double bitflip_cohering_closed(double p, double eta);

/// Piecewise closed form for the bit-flip decohering power, branching on
/// the threshold A = ((1-p)/p + sqrt(4p(1-p))/(4p^2)) / 2:
///   kx2 <= A: 2 sqrt(p(1-p))
///   kx2 >= A: (4 p kx2 (1 - p kx2) + s) / (1 + s), s = sqrt(4p(1-p) kx2)
/// Within a 1e-12 dead band around A both branches are evaluated and the
/// larger power wins. See the certification suites for the parameter band
/// where this piecewise form is known to disagree with the brute-force
/// minimum of F.
double bitflip_decohering_closed(double p, double kx2);

/// F_{alpha,beta}(xi) = (1 - sqrt(alpha (1-xi))) (1 - beta xi / (1 - alpha + alpha xi)):
/// the output skew coherence for equatorial inputs, as a function of
/// xi = (m . x)^2 in [0, 1 - kx2].
double bitflip_F_xi(double alpha, double beta, double xi);

/// Derived quantities for the bit-flip decohering minimization.
struct BitFlipParams {
    double p = 0.0;
    double kx2 = 0.0;          // (k . x)^2
    double alpha = 0.0;        // 4 p (1-p)
    double beta = 0.0;         // 4 p^2 kx2
    double eta = 0.0;          // kx2
    double xi_max = 0.0;       // 1 - kx2
    double a_threshold = 0.0;  // +inf at p = 0

    BitFlipParams(double p, double kx2);
};

/// Stationary-point formulas of F_{alpha,beta}; absent entries mark
/// undefined values (xi1 at alpha = 0, xi2/xi3 when the discriminant is
/// negative or the denominator vanishes).
struct BitFlipStationaryPoints {
    std::optional<double> xi1;
    std::optional<double> xi2;
    std::optional<double> xi3;
    double xi_max = 0.0;
    double a_threshold = 0.0;
};

BitFlipStationaryPoints bitflip_xi_critical(const BitFlipParams& params);

/// l1 cohering power of a tensor-power gate: (c + 1)^n - 1.
double tensor_cohering_theorem(double c_single, int n);

/// Heterogeneous form: prod_i (c_i + 1) - 1.
double tensor_cohering_product(const std::vector<double>& c_singles);

/// Lower bound on the l1 decohering power of a tensor-power gate:
/// 2^n - (2 - d)^n.
double tensor_decohering_bound(double d_single, int n);

/// Heterogeneous form: 2^n - prod_i (2 - d_i).
double tensor_decohering_bound_product(const std::vector<double>& d_singles);

/// Lower-bound ratios (2^n - prod_{i<n} (2 - d_i)) / (2^n - 1) for
/// n = 1..len(d). When every d_i > 0 the sequence approaches 1; any zero
/// entry caps it below 1, which `approaches_one` reports.
struct AsymptoticRatios {
    std::vector<double> ratios;
    bool approaches_one = true;
};

AsymptoticRatios asymptotic_ratio(const std::vector<double>& d_singles);

/// Skew cohering power of the CNOT gate in the basis of a 4-dimensional
/// observable (discrete max over its four eigenstates).
PowerResult cnot_power_report(const Observable& k);

}  // namespace cohpow
