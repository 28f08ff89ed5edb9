#include "cohpow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cohpow::verify {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<Vec3>& sphere_net_26() {
    static const std::vector<Vec3> net = [] {
        std::vector<Vec3> dirs;
        for (int x = -1; x <= 1; ++x)
            for (int y = -1; y <= 1; ++y)
                for (int z = -1; z <= 1; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    dirs.push_back(Vec3{double(x), double(y), double(z)}.normalized());
                }
        return dirs;
    }();
    return net;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

struct Tracker {
    double worst = 0.0;
    std::string where;

    void offer(double dev, const std::string& label) {
        if (dev > worst) {
            worst = dev;
            where = label;
        }
    }
};

CheckResult make_result(std::string name, const Tracker& t, double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.max_deviation = t.worst;
    r.tolerance = tol;
    r.passed = t.worst <= tol;
    r.detail = t.where;
    return r;
}

Observable pauli_z_observable() { return Observable(pauli_z(), "z"); }

}  // namespace

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::angle() { return uniform(0.0, 2.0 * kPi); }

Vec3 Rng::unit_vec3() {
    const double z = uniform(-1.0, 1.0);
    const double phi = angle();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

Complex Rng::standard_complex() {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(engine_);
    const double im = normal(engine_);
    return {re, im};
}

ComplexMatrix Rng::random_hermitian(std::size_t d) {
    ComplexMatrix g(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) g(r, c) = standard_complex();
    ComplexMatrix h = g + dagger(g);
    return Complex(0.5, 0.0) * h;
}

DensityMatrix Rng::random_density(std::size_t d) {
    ComplexMatrix g(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) g(r, c) = standard_complex();
    ComplexMatrix rho = g * dagger(g);
    const double tr = trace(rho).real();
    return DensityMatrix(Complex(1.0 / tr, 0.0) * rho);
}

DensityMatrix Rng::random_incoherent(const Observable& k) {
    const std::size_t d = k.dim();
    std::vector<double> weights(d);
    double sum = 0.0;
    for (double& w : weights) {
        w = uniform(0.0, 1.0);
        sum += w;
    }
    ComplexMatrix rho(d);
    const ComplexMatrix& v = k.eig().eigenvectors;
    for (std::size_t n = 0; n < d; ++n) {
        const double p = weights[n] / sum;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                rho(i, j) += p * v(i, n) * std::conj(v(j, n));
    }
    return DensityMatrix(std::move(rho));
}

PureState Rng::random_pure(std::size_t d) {
    std::vector<Complex> amps(d);
    double n2 = 0.0;
    for (Complex& a : amps) {
        a = standard_complex();
        n2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex& a : amps) a *= inv;
    return PureState(std::move(amps));
}

Channel Rng::random_qubit_unitary() { return unitary_rotation(unit_vec3(), uniform(0.0, kPi)); }

std::vector<CheckResult> suite_unitary(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> results;

    Tracker cd_gap, closed_vs_rotation, closed_vs_discrete;
    for (int i = 0; i < 100; ++i) {
        const Vec3 n = rng.unit_vec3();
        const Vec3 k = rng.unit_vec3();
        const double theta = rng.uniform(0.0, kPi);

        const UnitaryPowerEquality eq = unitary_power_equality(n, theta, k);
        std::ostringstream label;
        label << "theta=" << theta;
        cd_gap.offer(eq.gap, label.str());

        const BlochAffineMap map = bloch_map(unitary_rotation(n, theta));
        const Vec3 k_rot = map(k);
        const double overlap = dot(k_rot, k);
        closed_vs_rotation.offer(std::abs(eq.cohering - (1.0 - overlap * overlap)), label.str());

        if (i < 25) {
            const PowerResult discrete =
                cohering_power(unitary_rotation(n, theta), Observable::pauli_axis(k), Measure::Skew);
            closed_vs_discrete.offer(std::abs(eq.cohering - discrete.value), label.str());
        }
    }
    results.push_back(make_result("unitary cohering equals decohering (100 samples)", cd_gap, 1e-6));
    results.push_back(
        make_result("unitary closed form matches rotated-axis overlap", closed_vs_rotation, 1e-9));
    results.push_back(
        make_result("unitary closed form matches discrete skew maximum", closed_vs_discrete, 1e-9));

    Tracker purity;
    for (int i = 0; i < 50; ++i) {
        const Channel u = rng.random_qubit_unitary();
        const Vec3 m = rng.unit_vec3();
        const double out_norm =
            bloch_from_density(apply(u, density_from_bloch(BlochVector(m)))).norm();
        purity.offer(std::abs(out_norm - 1.0), "unit input");
    }
    results.push_back(make_result("unitary channels preserve Bloch norm", purity, 1e-10));

    Tracker hadamard_powers;
    {
        const Channel h = hadamard();
        const double expected[3] = {1.0, 0.0, 1.0};
        const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        const char* names[3] = {"x", "y", "z"};
        for (int i = 0; i < 3; ++i) {
            const Observable k = Observable::pauli_axis(axes[i], names[i]);
            const double coh = cohering_power(h, k, Measure::Skew).value;
            const double dec = decohering_power(h, k, Measure::Skew).value;
            hadamard_powers.offer(std::abs(coh - expected[i]), std::string("cohering ") + names[i]);
            hadamard_powers.offer(std::abs(dec - expected[i]), std::string("decohering ") + names[i]);
        }
    }
    results.push_back(make_result("hadamard skew powers are (1,0,1) in (x,y,z)", hadamard_powers, 1e-9));

    return results;
}

std::vector<CheckResult> suite_bitflip(std::uint64_t seed) {
    (void)seed;  // the grids are deterministic
    std::vector<CheckResult> results;
    const std::vector<double> p_grid = linspace(0.0, 1.0, 11);

    Tracker closed_vs_fmax;
    for (double p : p_grid) {
        const Channel ch = bit_flip(p);
        for (const Vec3& k : sphere_net_26()) {
            const double eta = k.x * k.x;
            const double closed = bitflip_cohering_closed(p, eta);
            const double fmax = std::max(f_function(ch, k, k), f_function(ch, -k, k));
            std::ostringstream label;
            label << "p=" << p << " eta=" << eta;
            closed_vs_fmax.offer(std::abs(closed - fmax), label.str());
        }
    }
    for (double p : {0.2, 0.4, 0.6, 0.8, 1.0}) {
        const Channel ch = bit_flip(p);
        for (double theta : linspace(0.0, 0.5 * kPi, 181)) {
            const Vec3 k{std::cos(theta), 0.0, std::sin(theta)};
            const double closed = bitflip_cohering_closed(p, k.x * k.x);
            const double fmax = std::max(f_function(ch, k, k), f_function(ch, -k, k));
            std::ostringstream label;
            label << "p=" << p << " theta=" << theta;
            closed_vs_fmax.offer(std::abs(closed - fmax), label.str());
        }
    }
    results.push_back(
        make_result("bitflip cohering closed form matches two-fold F max", closed_vs_fmax, 1e-9));

    Tracker closed_vs_discrete, decoh_closed_vs_search;
    for (double p : p_grid) {
        const Channel ch = bit_flip(p);
        for (const Vec3& k : sphere_net_26()) {
            std::ostringstream label;
            label << "p=" << p << " kx2=" << k.x * k.x;
            const double closed = bitflip_cohering_closed(p, k.x * k.x);
            const double discrete = cohering_power(ch, Observable::pauli_axis(k), Measure::Skew).value;
            closed_vs_discrete.offer(std::abs(closed - discrete), label.str());

            const double dec_closed = bitflip_decohering_closed(p, k.x * k.x);
            const double dec_search =
                decohering_power(ch, Observable::pauli_axis(k), Measure::Skew).value;
            decoh_closed_vs_search.offer(std::abs(dec_closed - dec_search), label.str());
        }
    }
    results.push_back(make_result("bitflip cohering closed form matches discrete skew maximum",
                                  closed_vs_discrete, 1e-6));
    results.push_back(make_result("bitflip decohering closed form matches circle search",
                                  decoh_closed_vs_search, 1e-6));

    Tracker axis_zero;
    for (double p : p_grid) {
        axis_zero.offer(std::abs(bitflip_cohering_closed(p, 1.0)), "eta=1");
        axis_zero.offer(std::abs(bitflip_cohering_closed(p, 0.0)), "eta=0");
    }
    results.push_back(make_result("bitflip x and z cohering vanish for all p", axis_zero, 1e-12));

    Tracker peak;
    peak.offer(std::abs(bitflip_cohering_closed(1.0, 0.5) - 1.0), "p=1 eta=1/2");
    results.push_back(make_result("bitflip p=1 cohering peaks at 1 on the diagonal axis", peak, 1e-12));

    Tracker phaseflip;
    for (double p : {0.0, 0.3, 0.7, 1.0}) {
        const Channel ch = phase_flip(p);
        for (const Vec3& k : sphere_net_26()) {
            const double eta = k.z * k.z;
            const double closed = bitflip_cohering_closed(p, eta);
            const double discrete = cohering_power(ch, Observable::pauli_axis(k), Measure::Skew).value;
            std::ostringstream label;
            label << "p=" << p << " kz2=" << eta;
            phaseflip.offer(std::abs(closed - discrete), label.str());
        }
    }
    results.push_back(
        make_result("phaseflip mirrors the bitflip closed form with x and z swapped", phaseflip, 1e-6));

    Tracker depol_cohering, depol_decohering;
    for (double p : p_grid) {
        const Channel ch = depolarizing(p);
        for (const Vec3& k : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
            depol_cohering.offer(cohering_power(ch, Observable::pauli_axis(k), Measure::Skew).value,
                                 "p=" + std::to_string(p));
        }
        const double closed = depolarizing_decohering_closed(p);
        const double numeric =
            decohering_power(ch, Observable::pauli_axis({0, 0, 1}), Measure::Skew).value;
        depol_decohering.offer(std::abs(closed - numeric), "p=" + std::to_string(p));
    }
    results.push_back(make_result("depolarizing has no cohering power", depol_cohering, 1e-10));
    results.push_back(make_result("depolarizing decohering closed form matches circle search",
                                  depol_decohering, 1e-6));

    return results;
}

std::vector<CheckResult> suite_tensor(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> results;
    const Observable kz = pauli_z_observable();
    const Observable kzz = Observable::tensor(kz, kz, "z*z");

    Tracker theorem1;
    for (int i = 0; i < 20; ++i) {
        const Channel u = rng.random_qubit_unitary();
        const double c1 = cohering_power(u, kz, Measure::L1).value;
        for (int n = 2; n <= 3; ++n) {
            Channel gate = n == 2 ? tensor({u, u}) : tensor({u, u, u});
            Observable basis = n == 2 ? kzz : Observable::tensor(kzz, kz, "z*z*z");
            const double direct = cohering_power(gate, basis, Measure::L1).value;
            const double predicted = tensor_cohering_theorem(c1, n);
            std::ostringstream label;
            label << "sample " << i << " n=" << n;
            theorem1.offer(std::abs(direct - predicted), label.str());
        }
    }
    results.push_back(make_result("tensor cohering theorem is exact (n=2,3)", theorem1, 1e-7));

    Tracker corollary;
    for (int i = 0; i < 10; ++i) {
        const Channel u1 = rng.random_qubit_unitary();
        const Channel u2 = rng.random_qubit_unitary();
        const double c1 = cohering_power(u1, kz, Measure::L1).value;
        const double c2 = cohering_power(u2, kz, Measure::L1).value;
        const double direct = cohering_power(tensor({u1, u2}), kzz, Measure::L1).value;
        const double predicted = tensor_cohering_product({c1, c2});
        corollary.offer(std::abs(direct - predicted), "pair " + std::to_string(i));
    }
    results.push_back(make_result("tensor cohering corollary is exact (10 pairs)", corollary, 1e-7));

    Tracker theorem2;
    for (int i = 0; i < 20; ++i) {
        const Channel u = rng.random_qubit_unitary();
        const double d1 = decohering_power(u, kz, Measure::L1).value;
        const double bound = tensor_decohering_bound(d1, 2);
        const double direct =
            decohering_power(tensor({u, u}), kzz, Measure::L1, SearchConfig::torus()).value;
        theorem2.offer(std::max(0.0, bound - direct), "sample " + std::to_string(i));
    }
    results.push_back(
        make_result("tensor decohering bound holds for n=2 (20 samples)", theorem2, 1e-6));

    Tracker saturation;
    saturation.offer(
        std::abs(decohering_power(tensor({hadamard(), hadamard()}), kzz, Measure::L1,
                                  SearchConfig::torus())
                     .value -
                 3.0),
        "hadamard^2");
    saturation.offer(
        decohering_power(tensor({identity_channel(2), identity_channel(2)}), kzz, Measure::L1,
                         SearchConfig::torus())
            .value,
        "identity^2");
    results.push_back(make_result("bound saturates at 3 for a unit-decohering gate and 0 for identity",
                                  saturation, 1e-9));

    Tracker ratios;
    {
        const AsymptoticRatios r = asymptotic_ratio(std::vector<double>(10, 0.5));
        const double expected = (1024.0 - std::pow(1.5, 10)) / 1023.0;
        ratios.offer(std::abs(r.ratios.back() - expected), "d=0.5 n=10");
        const AsymptoticRatios inc = asymptotic_ratio(std::vector<double>(12, 0.1));
        for (std::size_t i = 1; i < inc.ratios.size(); ++i)
            if (inc.ratios[i] <= inc.ratios[i - 1]) ratios.offer(1.0, "not increasing");
        if (!inc.approaches_one) ratios.offer(1.0, "flag");
        const AsymptoticRatios capped = asymptotic_ratio({0.5, 0.0, 0.5});
        if (capped.approaches_one) ratios.offer(1.0, "zero entry must cap the limit");
    }
    results.push_back(make_result("asymptotic ratio sequence: value, monotonicity, zero cap", ratios, 1e-12));

    Tracker optimality;
    {
        std::vector<std::pair<Channel, Observable>> cases;
        cases.emplace_back(rng.random_qubit_unitary(), kz);
        cases.emplace_back(bit_flip(0.3), Observable::pauli_axis(rng.unit_vec3()));
        cases.emplace_back(cnot(), kzz);
        cases.emplace_back(tensor({rng.random_qubit_unitary(), rng.random_qubit_unitary()}), kzz);
        for (const auto& [ch, k] : cases) {
            const double coh_l1 = cohering_power(ch, k, Measure::L1).value;
            const double coh_skew = cohering_power(ch, k, Measure::Skew).value;
            for (int i = 0; i < 50; ++i) {
                const DensityMatrix incoherent = rng.random_incoherent(k);
                const DensityMatrix out = apply(ch, incoherent);
                optimality.offer(std::max(0.0, c_l1(out, k).value - coh_l1), ch.label() + " l1");
                optimality.offer(std::max(0.0, c_skew(out, k).value - coh_skew), ch.label() + " skew");
            }
        }
    }
    results.push_back(
        make_result("discrete max attains the cohering optimum over mixtures", optimality, 1e-9));

    Tracker cnot_bases;
    {
        const Observable kx(pauli_x(), "x");
        const Observable kxz = Observable::tensor(kx, kz, "x*z");
        const Observable kxx = Observable::tensor(kx, kx, "x*x");
        const double in_zz = cnot_power_report(kzz).value;
        const double in_xz = cnot_power_report(kxz).value;
        const double in_xx = cnot_power_report(kxx).value;
        cnot_bases.offer(std::abs(in_zz), "z*z");
        cnot_bases.offer(std::abs(in_xz - 1.0), "x*z");
        cnot_bases.offer(std::abs(in_xx), "x*x");
        std::ostringstream detail;
        detail << "z*z=" << in_zz << " x*z=" << in_xz << " x*x=" << in_xx;
        CheckResult r = make_result("cnot skew cohering in product bases (z*z, x*z, x*x) = (0, 1, 0)",
                                    cnot_bases, 1e-9);
        r.detail = detail.str();
        results.push_back(r);
    }

    Tracker bell;
    {
        const Observable kx(pauli_x(), "x");
        const Observable kxz = Observable::tensor(kx, kz, "x*z");
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        const PureState plus_zero({inv_sqrt2, 0.0, inv_sqrt2, 0.0});
        const PureState out = apply_unitary(cnot(), plus_zero);
        bell.offer(std::abs(c_skew_pure(out, kxz).value - 1.0), "cnot|+,0>");
    }
    results.push_back(make_result("cnot output for |+,0> has unit x*z variance", bell, 1e-10));

    return results;
}

std::vector<CheckResult> suite_appendix(std::uint64_t seed) {
    (void)seed;
    std::vector<CheckResult> results;
    const SearchConfig fine = SearchConfig::interval(10001);

    Tracker piecewise;
    for (double p : linspace(0.05, 0.95, 19)) {
        for (double kx2 : linspace(0.0, 1.0, 11)) {
            const BitFlipParams params(p, kx2);
            const IntervalMin oracle = minimize_interval(
                [&params](double xi) { return bitflip_F_xi(params.alpha, params.beta, xi); }, 0.0,
                params.xi_max, fine);
            const double searched = 1.0 - oracle.value;
            const double closed = bitflip_decohering_closed(p, kx2);
            std::ostringstream label;
            label << "p=" << p << " kx2=" << kx2 << " (oracle " << searched << ", piecewise "
                  << closed << ")";
            piecewise.offer(std::abs(searched - closed), label.str());
        }
    }
    results.push_back(make_result(
        "bitflip piecewise decohering matches interval search (19x11 grid)", piecewise, 1e-7));

    Tracker special;
    for (double p : linspace(0.05, 0.5, 10))
        for (double kx2 : linspace(0.0, 1.0, 11))
            special.offer(std::abs(bitflip_decohering_closed(p, kx2) - 2.0 * std::sqrt(p * (1.0 - p))),
                          "p<=1/2");
    for (double p : linspace(0.05, 0.95, 19)) {
        const double expected = 2.0 * std::sqrt(p * (1.0 - p));
        special.offer(std::abs(bitflip_decohering_closed(p, 1.0) - expected), "k=x");
        special.offer(std::abs(bitflip_decohering_closed(p, 0.0) - expected), "k=z");
    }
    results.push_back(make_result(
        "special cases (p<=1/2, k=x, k=z) all give 2 sqrt(p(1-p))", special, 1e-9));

    Tracker endpoints;
    for (double p : linspace(0.05, 0.95, 19)) {
        for (double kx2 : linspace(0.0, 1.0, 11)) {
            const BitFlipParams params(p, kx2);
            endpoints.offer(
                std::abs(bitflip_F_xi(params.alpha, params.beta, 0.0) - (1.0 - std::sqrt(params.alpha))),
                "F(0)");
            if (kx2 > params.a_threshold + 1e-9) {
                const double e2 = 1.0 - bitflip_decohering_closed(p, kx2);
                endpoints.offer(std::abs(bitflip_F_xi(params.alpha, params.beta, params.xi_max) - e2),
                                "F(xi_max) vs upper branch");
            } else if (kx2 < params.a_threshold - 1e-9) {
                const double e1 = 1.0 - bitflip_decohering_closed(p, kx2);
                endpoints.offer(std::abs(bitflip_F_xi(params.alpha, params.beta, 0.0) - e1),
                                "F(0) vs lower branch");
            }
        }
    }
    endpoints.offer(std::abs(bitflip_F_xi(1.0, 0.0, 0.0)), "alpha=1 at xi=0");
    results.push_back(
        make_result("piecewise branches equal F at their attaining endpoints", endpoints, 1e-12));

    Tracker stationary;
    {
        const BitFlipStationaryPoints at_zero = bitflip_xi_critical(BitFlipParams(0.0, 0.5));
        if (at_zero.xi1.has_value()) stationary.offer(1.0, "xi1 must be absent at alpha=0");
        const BitFlipParams params(0.8, 0.3);
        const BitFlipStationaryPoints pts = bitflip_xi_critical(params);
        if (!pts.xi1.has_value())
            stationary.offer(1.0, "xi1 missing");
        else
            stationary.offer(std::abs(*pts.xi1 - (-(1.0 - params.alpha) / params.alpha)), "xi1 formula");
        stationary.offer(std::abs(pts.xi_max - (1.0 - 0.3)), "xi_max");
    }
    results.push_back(make_result("stationary-point formulas evaluate as written", stationary, 1e-12));

    return results;
}

std::vector<CheckResult> suite_axioms(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> results;

    Tracker vanish;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t d = 2 + (i % 3);
        const Observable k(rng.random_hermitian(d));
        const DensityMatrix rho = rng.random_incoherent(k);
        vanish.offer(c_l1(rho, k).value, "l1 d=" + std::to_string(d));
        vanish.offer(c_skew(rho, k).value, "skew d=" + std::to_string(d));
    }
    results.push_back(
        make_result("both measures vanish on incoherent states (1000 samples)", vanish, 1e-10));

    Tracker perturbed;
    {
        double min_seen = 1.0;
        for (int i = 0; i < 300; ++i) {
            const std::size_t d = 2 + (i % 3);
            const Observable k(rng.random_hermitian(d));
            const DensityMatrix diag = rng.random_incoherent(k);
            const double eps = 0.05;
            std::vector<Complex> amps(d, Complex(0.0, 0.0));
            for (std::size_t r = 0; r < d; ++r)
                amps[r] = (k.eig().eigenvectors(r, 0) + k.eig().eigenvectors(r, 1)) / std::sqrt(2.0);
            const DensityMatrix coherent = DensityMatrix::from_pure(PureState(std::move(amps)));
            ComplexMatrix mix(d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    mix(r, c) = (1.0 - eps) * diag.matrix()(r, c) + eps * coherent.matrix()(r, c);
            const DensityMatrix rho(std::move(mix));
            min_seen = std::min({min_seen, c_l1(rho, k).value, c_skew(rho, k).value});
        }
        Tracker t;
        t.offer(std::max(0.0, 1e-6 - min_seen), "min coherence " + std::to_string(min_seen));
        perturbed = t;
    }
    results.push_back(
        make_result("both measures exceed 1e-6 on coherently perturbed states", perturbed, 0.0));

    Tracker convex;
    for (int i = 0; i < 400; ++i) {
        const std::size_t d = 2 + (i % 2);
        const Observable k(rng.random_hermitian(d));
        const DensityMatrix rho1 = rng.random_density(d);
        const DensityMatrix rho2 = rng.random_density(d);
        const double lambda = rng.uniform(0.0, 1.0);
        ComplexMatrix mixed(d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                mixed(r, c) = lambda * rho1.matrix()(r, c) + (1.0 - lambda) * rho2.matrix()(r, c);
        const DensityMatrix rho(std::move(mixed));
        const double l1_excess = c_l1(rho, k).value -
                                 (lambda * c_l1(rho1, k).value + (1.0 - lambda) * c_l1(rho2, k).value);
        const double skew_excess =
            c_skew(rho, k).value -
            (lambda * c_skew(rho1, k).value + (1.0 - lambda) * c_skew(rho2, k).value);
        convex.offer(std::max(0.0, l1_excess), "l1");
        convex.offer(std::max(0.0, skew_excess), "skew");
    }
    results.push_back(make_result("mixing never increases coherence (both measures)", convex, 1e-9));

    Tracker bridge;
    for (int i = 0; i < 500; ++i) {
        const PureState psi = rng.random_pure(2);
        const Vec3 k = rng.unit_vec3();
        const Observable obs = Observable::pauli_axis(k);
        const DensityMatrix rho = DensityMatrix::from_pure(psi);
        const double l1 = c_l1(rho, obs).value;
        const double skew = c_skew(rho, obs).value;
        bridge.offer(std::abs(skew - l1 * l1), "sample " + std::to_string(i));
    }
    results.push_back(make_result("pure qubit states: skew equals l1 squared", bridge, 1e-9));

    Tracker scaling;
    for (int i = 0; i < 200; ++i) {
        const Vec3 k = rng.unit_vec3();
        const double a = rng.uniform(-2.0, 2.0);
        const double b = rng.uniform(-2.0, 2.0);
        const DensityMatrix rho = rng.random_density(2);
        ComplexMatrix mat = Complex(b, 0.0) * pauli_dot(k);
        for (std::size_t j = 0; j < 2; ++j) mat(j, j) += a;
        const double full = c_skew(rho, Observable(std::move(mat))).value;
        const double base = c_skew(rho, Observable::pauli_axis(k)).value;
        scaling.offer(std::abs(full - b * b * base), "sample " + std::to_string(i));
    }
    results.push_back(make_result("skew scaling: K = aI + b sigma.k scales as b^2", scaling, 1e-9));

    Tracker closed_forms;
    for (int i = 0; i < 1000; ++i) {
        const Vec3 dir = rng.unit_vec3();
        const double radius = rng.uniform(0.0, 1.0);
        const BlochVector r(radius * dir.x, radius * dir.y, radius * dir.z);
        const Vec3 k = rng.unit_vec3();
        const Observable obs = Observable::pauli_axis(k);
        const DensityMatrix rho = density_from_bloch(r);
        closed_forms.offer(std::abs(c_l1_qubit(r, k).value - c_l1(rho, obs).value), "l1");
        closed_forms.offer(std::abs(c_skew_qubit(r, k).value - c_skew(rho, obs).value), "skew");
    }
    results.push_back(
        make_result("qubit closed forms match the general implementations (1000 states)",
                    closed_forms, 1e-9));

    return results;
}

std::vector<CheckResult> suite_core(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> results;

    Tracker reconstruct, orthonormal, residual;
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 2 + (i % 7);
        const ComplexMatrix a = rng.random_hermitian(d);
        const EigenDecomposition eig = herm_eig(a);
        const ComplexMatrix& v = eig.eigenvectors;

        ComplexMatrix rebuilt(d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                Complex acc(0.0, 0.0);
                for (std::size_t k = 0; k < d; ++k)
                    acc += v(r, k) * eig.eigenvalues[k] * std::conj(v(c, k));
                rebuilt(r, c) = acc;
            }
        reconstruct.offer(frobenius_norm(rebuilt - a), "d=" + std::to_string(d));
        orthonormal.offer(frobenius_norm(dagger(v) * v - ComplexMatrix::identity(d)),
                          "d=" + std::to_string(d));

        for (std::size_t col = 0; col < d; ++col) {
            std::vector<Complex> vc(d);
            for (std::size_t r = 0; r < d; ++r) vc[r] = v(r, col);
            const std::vector<Complex> av = mat_vec(a, vc);
            double dev = 0.0;
            for (std::size_t r = 0; r < d; ++r)
                dev = std::max(dev, std::abs(av[r] - eig.eigenvalues[col] * vc[r]));
            residual.offer(dev, "d=" + std::to_string(d));
        }
    }
    results.push_back(make_result("eigendecomposition reconstructs the input (d<=8)", reconstruct, 1e-9));
    results.push_back(make_result("eigenvector columns are orthonormal", orthonormal, 1e-10));
    results.push_back(make_result("eigen residuals |A v - lambda v| stay small", residual, 1e-9));

    Tracker sqrt_round;
    for (int i = 0; i < 100; ++i) {
        const std::size_t d = 2 + (i % 5);
        const DensityMatrix rho = rng.random_density(d);
        const ComplexMatrix root = sqrt_psd(rho.matrix());
        sqrt_round.offer(frobenius_norm(root * root - rho.matrix()), "d=" + std::to_string(d));
    }
    results.push_back(make_result("sqrt_psd squares back to the input", sqrt_round, 1e-9));

    Tracker kron_props, trace_cyclic;
    for (int i = 0; i < 50; ++i) {
        auto rand2 = [&rng] {
            ComplexMatrix m(2);
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c < 2; ++c) m(r, c) = rng.standard_complex();
            return m;
        };
        const ComplexMatrix a = rand2(), b = rand2(), c = rand2(), d = rand2();
        kron_props.offer(max_abs_entry(kron(a, b) * kron(c, d) - kron(a * c, b * d)), "mixed product");
        kron_props.offer(max_abs_entry(kron(kron(a, b), c) - kron(a, kron(b, c))), "associativity");
        trace_cyclic.offer(std::abs(trace(a * b) - trace(b * a)), "2x2");
    }
    results.push_back(make_result("kron: mixed product and associativity", kron_props, 1e-12));
    results.push_back(make_result("trace is cyclic", trace_cyclic, 1e-12));

    Tracker bloch_round;
    for (int i = 0; i < 200; ++i) {
        const Vec3 dir = rng.unit_vec3();
        const double radius = rng.uniform(0.0, 1.0);
        const BlochVector r(radius * dir.x, radius * dir.y, radius * dir.z);
        const Vec3 back = bloch_from_density(density_from_bloch(r)).vec();
        bloch_round.offer((back - r.vec()).norm(), "vector");
        const DensityMatrix rho = rng.random_density(2);
        const DensityMatrix rebuilt = density_from_bloch(bloch_from_density(rho));
        bloch_round.offer(max_abs_entry(rebuilt.matrix() - rho.matrix()), "matrix");
    }
    results.push_back(make_result("bloch round trip is the identity", bloch_round, 1e-12));

    Tracker equatorial;
    for (int i = 0; i < 100; ++i) {
        const Vec3 k = rng.unit_vec3();
        const double omega = rng.angle();
        const PureState psi = equatorial_state(k, omega);
        const DensityMatrix rho = DensityMatrix::from_pure(psi);
        const BlochVector m = bloch_from_density(rho);
        equatorial.offer(std::abs(m.norm() - 1.0), "norm");
        equatorial.offer(std::abs(dot(m.vec(), k)), "orthogonality");
        equatorial.offer(std::abs(c_l1(rho, Observable::pauli_axis(k)).value - 1.0), "l1");
        equatorial.offer(std::abs(c_skew(rho, Observable::pauli_axis(k)).value - 1.0), "skew");
    }
    results.push_back(make_result("equatorial states are maximally coherent", equatorial, 1e-10));

    Tracker max_coh;
    for (int i = 0; i < 60; ++i) {
        const std::size_t d = 2 + (i % 3);
        const Observable k(rng.random_hermitian(d));
        std::vector<double> phases(d - 1);
        for (double& phi : phases) phi = rng.angle();
        const PureState psi = max_coherent_state(k, phases);
        max_coh.offer(std::abs(c_l1(DensityMatrix::from_pure(psi), k).value - (d - 1.0)),
                      "d=" + std::to_string(d));
    }
    results.push_back(make_result("max coherent states saturate the l1 bound d-1", max_coh, 1e-10));

    Tracker tp, physical, bloch_match, ball;
    {
        std::vector<Channel> channels = {identity_channel(2), hadamard(), depolarizing(0.35),
                                         bit_flip(0.6),       phase_flip(0.25),
                                         rng.random_qubit_unitary()};
        for (const Channel& ch : channels) {
            ComplexMatrix sum(ch.dim());
            for (const ComplexMatrix& kop : ch.kraus()) sum = sum + dagger(kop) * kop;
            tp.offer(frobenius_norm(sum - ComplexMatrix::identity(ch.dim())), ch.label());

            for (int i = 0; i < 20; ++i) {
                const DensityMatrix rho = rng.random_density(2);
                const DensityMatrix out = apply(ch, rho);
                physical.offer(std::abs(trace(out.matrix()).real() - 1.0), ch.label() + " trace");
                physical.offer(hermiticity_deviation(out.matrix()), ch.label() + " herm");
            }

            const BlochAffineMap map = bloch_map(ch);
            for (int i = 0; i < 100; ++i) {
                const Vec3 m = rng.unit_vec3();
                const Vec3 direct =
                    bloch_from_density(apply(ch, density_from_bloch(BlochVector(m)))).vec();
                bloch_match.offer((map(m) - direct).norm(), ch.label());
                ball.offer(std::max(0.0, map(m).norm() - 1.0), ch.label());
            }
        }
        const Channel two_qubit = tensor({bit_flip(0.2), depolarizing(0.4)});
        ComplexMatrix sum(two_qubit.dim());
        for (const ComplexMatrix& kop : two_qubit.kraus()) sum = sum + dagger(kop) * kop;
        tp.offer(frobenius_norm(sum - ComplexMatrix::identity(4)), two_qubit.label());
    }
    results.push_back(make_result("constructed channels are trace preserving", tp, 1e-10));
    results.push_back(make_result("channel outputs stay physical", physical, 1e-12));
    results.push_back(make_result("bloch map matches the channel action", bloch_match, 1e-10));
    results.push_back(make_result("bloch map keeps the unit ball inside the unit ball", ball, 1e-9));

    Tracker circle_scan, refine_monotone;
    for (int i = 0; i < 1000; ++i) {
        std::array<double, 9> coeff{};
        for (double& c : coeff) c = rng.uniform(-1.0, 1.0);
        auto poly = [&coeff](double w) {
            double value = coeff[0];
            const double c1 = std::cos(w), s1 = std::sin(w);
            double ck = 1.0, sk = 0.0;
            for (int k = 1; k <= 4; ++k) {
                const double ck_next = ck * c1 - sk * s1;
                const double sk_next = sk * c1 + ck * s1;
                ck = ck_next;
                sk = sk_next;
                value += coeff[2 * k - 1] * ck + coeff[2 * k] * sk;
            }
            return value;
        };

        const CircleMin found = minimize_circle(poly);
        double scan_best = poly(0.0);
        const int scan_n = 100000;
        for (int j = 1; j < scan_n; ++j)
            scan_best = std::min(scan_best, poly(2.0 * kPi * j / scan_n));
        circle_scan.offer(std::max(0.0, found.value - scan_best), "poly " + std::to_string(i));

        double coarse_best = poly(0.0);
        for (int j = 1; j < 360; ++j) coarse_best = std::min(coarse_best, poly(2.0 * kPi * j / 360));
        refine_monotone.offer(std::max(0.0, found.value - coarse_best), "poly " + std::to_string(i));
    }
    results.push_back(make_result("circle search beats a 1e5-point scan (1000 random objectives)",
                                  circle_scan, 1e-6));
    results.push_back(
        make_result("refinement never worsens the coarse minimum", refine_monotone, 0.0));

    Tracker torus_circle;
    for (int i = 0; i < 20; ++i) {
        std::array<double, 5> coeff{};
        for (double& c : coeff) c = rng.uniform(-1.0, 1.0);
        auto poly = [&coeff](double w) {
            return coeff[0] + coeff[1] * std::cos(w) + coeff[2] * std::sin(w) +
                   coeff[3] * std::cos(2 * w) + coeff[4] * std::sin(2 * w);
        };
        const SearchConfig cfg{360, 1e-9, 200};
        const CircleMin circle = minimize_circle(poly, cfg);
        const TorusMin torus =
            minimize_torus([&poly](const std::vector<double>& x) { return poly(x[0]); }, 1, cfg);
        torus_circle.offer(std::abs(circle.value - torus.value), "poly " + std::to_string(i));
    }
    results.push_back(
        make_result("one-dimensional torus search matches circle search", torus_circle, 1e-9));

    return results;
}

std::vector<CheckResult> suite_all(std::uint64_t seed) {
    std::vector<CheckResult> all;
    for (const auto& suite : {suite_core, suite_axioms, suite_unitary, suite_bitflip, suite_tensor,
                              suite_appendix}) {
        std::vector<CheckResult> part = suite(seed);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "all") return suite_all(seed);
    if (name == "unitary") return suite_unitary(seed);
    if (name == "bitflip") return suite_bitflip(seed);
    if (name == "tensor") return suite_tensor(seed);
    if (name == "appendix") return suite_appendix(seed);
    if (name == "axioms") return suite_axioms(seed);
    if (name == "core") return suite_core(seed);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace cohpow::verify
