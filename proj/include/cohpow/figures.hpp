#pragma once

#include <ostream>

namespace cohpow {

/// Cohering power of the rotation channel as a function of the rotation
/// angle: columns (theta_rad, kdotn, cohering_power), kdotn in
/// {0, 0.25, 0.5, 0.75, 1}, theta at 181 points in [0, pi].
void write_fig1(std::ostream& os);

/// Cohering power of the bit-flip channel as a function of the coherence
/// direction: columns (theta_rad, p, cohering_power), p in
/// {0.2, 0.4, 0.6, 0.8, 1.0}, theta (angle between k and x) at 181 points
/// in [0, pi/2].
void write_fig3(std::ostream& os);

/// Locale-independent number formatting used in every CSV: 9 significant
/// digits, dot decimal separator.
std::string csv_number(double v);

}  // namespace cohpow
