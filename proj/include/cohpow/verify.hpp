#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cohpow/power.hpp"

namespace cohpow::verify {

/// One certification check: a named property, the worst deviation observed,
/// and the tolerance it was held to.
struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

/// Seeded generators for the property suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    double angle();                  // [0, 2 pi)
    Vec3 unit_vec3();                // uniform on the sphere
    Complex standard_complex();      // normal real and imaginary parts

    ComplexMatrix random_hermitian(std::size_t d);
    DensityMatrix random_density(std::size_t d);
    /// Random mixture of the basis states of `k`.
    DensityMatrix random_incoherent(const Observable& k);
    PureState random_pure(std::size_t d);
    Channel random_qubit_unitary();

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

std::vector<CheckResult> suite_unitary(std::uint64_t seed);
std::vector<CheckResult> suite_bitflip(std::uint64_t seed);
std::vector<CheckResult> suite_tensor(std::uint64_t seed);
std::vector<CheckResult> suite_appendix(std::uint64_t seed);
std::vector<CheckResult> suite_axioms(std::uint64_t seed);
std::vector<CheckResult> suite_core(std::uint64_t seed);

/// Every suite above, in a fixed order.
std::vector<CheckResult> suite_all(std::uint64_t seed);

/// Dispatch by name: all|unitary|bitflip|tensor|appendix (plus axioms/core).
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace cohpow::verify
