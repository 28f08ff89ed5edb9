#include "cohpow/figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "cohpow/power.hpp"

namespace cohpow {

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_fig1(std::ostream& os) {
    os << "theta_rad,kdotn,cohering_power\n";
    for (double kdotn : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (int i = 0; i <= 180; ++i) {
            const double theta = std::numbers::pi * i / 180.0;
            const double c = std::cos(theta);
            const double overlap = c + (1.0 - c) * kdotn * kdotn;
            const double power = std::max(0.0, 1.0 - overlap * overlap);
            os << csv_number(theta) << ',' << csv_number(kdotn) << ',' << csv_number(power) << '\n';
        }
    }
}

void write_fig3(std::ostream& os) {
    os << "theta_rad,p,cohering_power\n";
    for (double p : {0.2, 0.4, 0.6, 0.8, 1.0}) {
        for (int i = 0; i <= 180; ++i) {
            const double theta = 0.5 * std::numbers::pi * i / 180.0;
            const double kx = std::cos(theta);
            const double power = bitflip_cohering_closed(p, kx * kx);
            os << csv_number(theta) << ',' << csv_number(p) << ',' << csv_number(power) << '\n';
        }
    }
}

}  // namespace cohpow
