#include "cohpow/power_dispatch.hpp"

#include <cmath>
#include <numbers>

namespace cohpow {

namespace {

std::optional<double> closed_form_for(const Channel& ch, const std::optional<Vec3>& k_axis,
                                      Measure measure, PowerKind kind) {
    if (measure != Measure::Skew || ch.dim() != 2) return std::nullopt;
    const std::string& family = ch.label();

    if (family == "identity") return 0.0;

    if (family == "unitary" || family == "hadamard") {
        if (!k_axis) return std::nullopt;
        Vec3 axis{0.0, 1.0, 0.0};
        double theta = 0.5 * std::numbers::pi;
        if (family == "unitary") {
            axis = Vec3{ch.param("nx"), ch.param("ny"), ch.param("nz")};
            theta = ch.param("theta");
        }
        // unitary channels: cohering and decohering closed forms coincide
        return unitary_cohering_closed(axis, theta, *k_axis);
    }

    if (family == "depolarizing") {
        const double p = ch.param("p");
        return kind == PowerKind::Cohering ? 0.0 : depolarizing_decohering_closed(p);
    }

    if (family == "bitflip" || family == "phaseflip") {
        if (!k_axis) return std::nullopt;
        const double p = ch.param("p");
        const double proj = family == "bitflip" ? k_axis->x : k_axis->z;
        const double sq = proj * proj;
        return kind == PowerKind::Cohering ? bitflip_cohering_closed(p, sq)
                                           : bitflip_decohering_closed(p, sq);
    }

    return std::nullopt;
}

}  // namespace

double PowerEvaluation::gap() const {
    if (closed_form && numeric) return std::abs(*closed_form - *numeric);
    return 0.0;
}

PowerEvaluation evaluate_power(const Channel& ch, const Observable& k,
                               const std::optional<Vec3>& k_axis, Measure measure, PowerKind kind,
                               bool certify, const SearchConfig& cfg) {
    PowerEvaluation out;
    out.closed_form = closed_form_for(ch, k_axis, measure, kind);

    const bool need_numeric = certify || !out.closed_form;
    if (need_numeric) {
        const PowerResult numeric = kind == PowerKind::Cohering
                                        ? cohering_power(ch, k, measure)
                                        : decohering_power(ch, k, measure, cfg);
        out.numeric = numeric.value;
        out.reported = numeric;
    }
    if (out.closed_form) {
        out.reported.value = *out.closed_form;
        out.reported.measure = measure;
        out.reported.method = PowerMethod::ClosedForm;
        out.reported.witness_index = -1;
        out.reported.witness_phases.clear();
    }
    return out;
}

}  // namespace cohpow
