#pragma once

#include <optional>
#include <string>

#include "cohpow/power.hpp"

namespace cohpow {

enum class PowerKind { Cohering, Decohering };

/// Result of evaluating a channel power the way the front end reports it:
/// a closed form when the channel belongs to a family with one (identity,
/// hadamard, unitary, depolarizing, bitflip, phaseflip under the skew
/// measure), the generic numeric route otherwise. With `certify` both
/// routes are computed so their gap can be printed.
struct PowerEvaluation {
    PowerResult reported;
    std::optional<double> closed_form;
    std::optional<double> numeric;

    double gap() const;  // |closed - numeric| when both are present, else 0
};

PowerEvaluation evaluate_power(const Channel& ch, const Observable& k,
                               const std::optional<Vec3>& k_axis, Measure measure, PowerKind kind,
                               bool certify, const SearchConfig& cfg = SearchConfig::circle());

}  // namespace cohpow
