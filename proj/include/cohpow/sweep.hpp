#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cohpow/power_dispatch.hpp"

namespace cohpow {

/// Parameter sweep over one numeric field of a JSON channel spec.
struct SweepSpec {
    std::string channel_json;              // JSON document; the swept field must exist in it
    std::string param;                     // e.g. "p" or "theta"
    double lo = 0.0, hi = 1.0;
    int steps = 2;                         // >= 2
    std::vector<Vec3> directions;          // unit k directions
    std::vector<std::string> direction_labels;
    Measure measure = Measure::Skew;
    PowerKind kind = PowerKind::Cohering;
};

/// Emits CSV rows (param, kx, ky, kz, kind, measure, method, value) in
/// deterministic grid order (directions outer, parameter inner). Grid
/// points are evaluated as an order-independent parallel map; the thread
/// count is capped by the COHERENCE_POWER_THREADS environment variable.
void run_sweep(const SweepSpec& spec, std::ostream& os);

}  // namespace cohpow
