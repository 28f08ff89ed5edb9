#include "cohpow/power.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cohpow {

namespace {

constexpr double kDeadBand = 1e-12;

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

double coherence_of(const DensityMatrix& rho, const Observable& k, Measure m) {
    return m == Measure::L1 ? c_l1(rho, k).value : c_skew(rho, k).value;
}

void require_dims(const Channel& ch, const Observable& k, const char* op) {
    if (ch.dim() != k.dim()) {
        std::ostringstream msg;
        msg << op << ": channel dim " << ch.dim() << " does not match observable dim " << k.dim();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

const char* power_method_name(PowerMethod m) {
    switch (m) {
        case PowerMethod::ClosedForm: return "closed_form";
        case PowerMethod::DiscreteMax: return "discrete_max";
        case PowerMethod::NumericMin: return "numeric_min";
    }
    return "?";
}

PowerResult cohering_power(const Channel& ch, const Observable& k, Measure measure) {
    require_dims(ch, k, "cohering_power");
    PowerResult result;
    result.measure = measure;
    result.method = PowerMethod::DiscreteMax;
    result.value = -1.0;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        const PureState basis_state{k.basis_column(i)};
        const DensityMatrix out = apply(ch, DensityMatrix::from_pure(basis_state));
        const double value = coherence_of(out, k, measure);
        if (value > result.value) {
            result.value = value;
            result.witness_index = static_cast<int>(i);
        }
    }
    return result;
}

PowerResult decohering_power(const Channel& ch, const Observable& k, Measure measure,
                             const SearchConfig& cfg) {
    require_dims(ch, k, "decohering_power");
    const std::size_t d = ch.dim();
    if (measure == Measure::Skew && d != 2)
        throw UnsupportedCombination(
            "decohering_power: the maximally coherent set for the skew measure is only known for qubits");
    if (measure == Measure::L1 && d > 4)
        throw UnsupportedCombination("decohering_power: l1 phase-torus search is limited to d <= 4");
    if (measure == Measure::Skew) {
        const double spread = k.eig().eigenvalues.back() - k.eig().eigenvalues.front();
        if (spread <= kHermitianTol)
            throw std::invalid_argument("decohering_power: skew measure needs a nondegenerate observable");
    }

    auto input_state = [&k](const std::vector<double>& phases) {
        return DensityMatrix::from_pure(max_coherent_state(k, phases));
    };
    auto output_coherence = [&](const std::vector<double>& phases) {
        return coherence_of(apply(ch, input_state(phases)), k, measure);
    };
    const double c_max = coherence_of(input_state(std::vector<double>(d - 1, 0.0)), k, measure);

    PowerResult result;
    result.measure = measure;
    result.method = PowerMethod::NumericMin;
    if (d == 2) {
        const CircleMin min =
            minimize_circle([&](double omega) { return output_coherence({omega}); }, cfg);
        result.value = c_max - min.value;
        result.witness_phases = {min.omega};
    } else {
        const TorusMin min = minimize_torus(output_coherence, d - 1, cfg);
        result.value = c_max - min.value;
        result.witness_phases = min.phases;
    }
    return result;
}

double f_function(const Channel& ch, const Vec3& m_hat, const Vec3& k_hat) {
    if (ch.dim() != 2) throw std::invalid_argument("f_function: qubit channel required");
    if (std::abs(m_hat.norm() - 1.0) > kHermitianTol || std::abs(k_hat.norm() - 1.0) > kHermitianTol)
        throw std::invalid_argument("f_function: m_hat and k_hat must be unit vectors");
    const BlochVector out = bloch_from_density(apply(ch, density_from_bloch(BlochVector(m_hat))));
    return c_skew_qubit(out, k_hat).value;
}

PowerResult cohering_power_qubit(const Channel& ch, const Vec3& k_hat) {
    if (ch.dim() != 2) throw std::invalid_argument("cohering_power_qubit: qubit channel required");
    const double plus = f_function(ch, k_hat, k_hat);
    const double minus = f_function(ch, -k_hat, k_hat);
    PowerResult result;
    result.measure = Measure::Skew;
    result.method = PowerMethod::DiscreteMax;
    result.value = plus >= minus ? plus : minus;
    result.witness_index = plus >= minus ? 0 : 1;
    return result;
}

double unitary_cohering_closed(const Vec3& n_hat, double theta, const Vec3& k_hat) {
    const double c = std::cos(theta);
    const double kn = dot(k_hat, n_hat);
    const double overlap = c + (1.0 - c) * kn * kn;
    return clamp01(1.0 - overlap * overlap);
}

UnitaryPowerEquality unitary_power_equality(const Vec3& n_hat, double theta, const Vec3& k_hat,
                                            const SearchConfig& cfg) {
    UnitaryPowerEquality out;
    out.cohering = unitary_cohering_closed(n_hat, theta, k_hat);
    const Channel u = unitary_rotation(n_hat, theta);
    out.decohering = decohering_power(u, Observable::pauli_axis(k_hat), Measure::Skew, cfg).value;
    out.gap = std::abs(out.cohering - out.decohering);
    return out;
}

double depolarizing_decohering_closed(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("depolarizing_decohering_closed: p outside [0, 1]");
    const double shrink = 1.0 - p;
    return std::sqrt(clamp01(1.0 - shrink * shrink));
}

double bitflip_cohering_closed(double p, double eta) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("bitflip_cohering_closed: p outside [0, 1]");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("bitflip_cohering_closed: eta outside [0, 1]");
    const double numerator = 4.0 * p * p * eta * (1.0 - eta);
    if (numerator == 0.0) return 0.0;
    const double mixed = 4.0 * p * (1.0 - p) * (1.0 - eta);  // alpha (1 - eta)
    const double denominator = 1.0 - mixed;
    if (denominator < kDeadBand) return 0.0;  // removable singularity, limit is 0
    return (1.0 - std::sqrt(clamp01(mixed))) * numerator / denominator;
}

double bitflip_decohering_closed(double p, double kx2) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("bitflip_decohering_closed: p outside [0, 1]");
    if (!(kx2 >= 0.0 && kx2 <= 1.0))
        throw std::invalid_argument("bitflip_decohering_closed: kx2 outside [0, 1]");
    if (p == 0.0) return 0.0;

    const double below = 2.0 * std::sqrt(p * (1.0 - p));
    auto above = [p, kx2]() {
        const double s = std::sqrt(4.0 * p * (1.0 - p) * kx2);
        return (4.0 * p * kx2 * (1.0 - p * kx2) + s) / (1.0 + s);
    };

    const double a = BitFlipParams(p, kx2).a_threshold;
    if (kx2 < a - kDeadBand) return below;
    if (kx2 > a + kDeadBand) return above();
    return std::max(below, above());
}

double bitflip_F_xi(double alpha, double beta, double xi) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("bitflip_F_xi: alpha outside [0, 1]");
    if (!(beta >= 0.0)) throw std::invalid_argument("bitflip_F_xi: beta must be nonnegative");
    if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("bitflip_F_xi: xi outside [0, 1]");
    const double denominator = 1.0 - alpha + alpha * xi;
    if (!(denominator > 0.0)) {
        // alpha = 1, xi = 0: the 0/0 term vanishes along with the first factor
        if (beta * xi == 0.0) return 1.0 - std::sqrt(alpha * (1.0 - xi));
        throw std::invalid_argument("bitflip_F_xi: denominator 1 - alpha + alpha xi must be positive");
    }
    return (1.0 - std::sqrt(alpha * (1.0 - xi))) * (1.0 - beta * xi / denominator);
}

BitFlipParams::BitFlipParams(double p_in, double kx2_in) : p(p_in), kx2(kx2_in) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("BitFlipParams: p outside [0, 1]");
    if (!(kx2 >= 0.0 && kx2 <= 1.0))
        throw std::invalid_argument("BitFlipParams: kx2 outside [0, 1]");
    alpha = 4.0 * p * (1.0 - p);
    beta = 4.0 * p * p * kx2;
    eta = kx2;
    xi_max = 1.0 - kx2;
    a_threshold = p == 0.0 ? std::numeric_limits<double>::infinity()
                           : 0.5 * ((1.0 - p) / p + std::sqrt(alpha) / (4.0 * p * p));
}

BitFlipStationaryPoints bitflip_xi_critical(const BitFlipParams& params) {
    const double alpha = params.alpha, beta = params.beta;
    BitFlipStationaryPoints out;
    out.xi_max = params.xi_max;
    out.a_threshold = params.a_threshold;
    if (alpha > 0.0) out.xi1 = -(1.0 - alpha) / alpha;
    const double diff = alpha - beta;
    if (alpha > 0.0 && diff != 0.0) {
        const double discriminant = -(1.0 - alpha) * diff * diff * diff * beta;
        if (discriminant >= 0.0) {
            const double root = std::sqrt(discriminant);
            const double lead = -(1.0 - alpha) * diff * (alpha - 2.0 * beta);
            const double denom = alpha * diff * diff;
            out.xi2 = (lead + root) / denom;
            out.xi3 = (lead - root) / denom;
        }
    }
    return out;
}

double tensor_cohering_theorem(double c_single, int n) {
    if (c_single < 0.0) throw std::invalid_argument("tensor_cohering_theorem: negative power");
    if (n < 1) throw std::invalid_argument("tensor_cohering_theorem: n must be >= 1");
    return std::pow(c_single + 1.0, n) - 1.0;
}

double tensor_cohering_product(const std::vector<double>& c_singles) {
    if (c_singles.empty()) throw std::invalid_argument("tensor_cohering_product: empty list");
    double prod = 1.0;
    for (double c : c_singles) {
        if (c < 0.0) throw std::invalid_argument("tensor_cohering_product: negative power");
        prod *= c + 1.0;
    }
    return prod - 1.0;
}

double tensor_decohering_bound(double d_single, int n) {
    if (!(d_single >= 0.0 && d_single <= 1.0))
        throw std::invalid_argument("tensor_decohering_bound: d outside [0, 1]");
    if (n < 1) throw std::invalid_argument("tensor_decohering_bound: n must be >= 1");
    return std::pow(2.0, n) - std::pow(2.0 - d_single, n);
}

double tensor_decohering_bound_product(const std::vector<double>& d_singles) {
    if (d_singles.empty()) throw std::invalid_argument("tensor_decohering_bound_product: empty list");
    double prod = 1.0;
    for (double d : d_singles) {
        if (!(d >= 0.0 && d <= 1.0))
            throw std::invalid_argument("tensor_decohering_bound_product: d outside [0, 1]");
        prod *= 2.0 - d;
    }
    return std::pow(2.0, d_singles.size()) - prod;
}

AsymptoticRatios asymptotic_ratio(const std::vector<double>& d_singles) {
    if (d_singles.empty()) throw std::invalid_argument("asymptotic_ratio: empty list");
    AsymptoticRatios out;
    out.ratios.reserve(d_singles.size());
    double prod = 1.0;
    double two_n = 1.0;
    for (double d : d_singles) {
        if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("asymptotic_ratio: d outside [0, 1]");
        if (d == 0.0) out.approaches_one = false;
        prod *= 2.0 - d;
        two_n *= 2.0;
        out.ratios.push_back((two_n - prod) / (two_n - 1.0));
    }
    return out;
}

PowerResult cnot_power_report(const Observable& k) {
    if (k.dim() != 4) throw std::invalid_argument("cnot_power_report: 4-dimensional observable required");
    return cohering_power(cnot(), k, Measure::Skew);
}

}  // namespace cohpow
