#pragma once

#include <functional>
#include <vector>

namespace cohpow {

/// Coarse-grid-then-refine search settings. Grid scan plus golden-section
/// refinement needs only continuity of the objective, which matters here:
/// the l1 coherence objectives carry |.| kinks that rule out derivatives.
struct SearchConfig {
    int coarse_points = 360;       // per dimension
    double refine_tol = 1e-9;      // parameter-space tolerance
    int max_refine_iters = 200;

    static SearchConfig circle() { return {360, 1e-9, 200}; }
    static SearchConfig torus() { return {24, 1e-9, 200}; }
    static SearchConfig interval(int points) { return {points, 1e-9, 200}; }

    void validate() const;  // coarse_points >= 8, refine_tol > 0
};

struct CircleMin {
    double omega = 0.0;
    double value = 0.0;
};

/// Minimize a 2*pi-periodic function. Ties on the coarse grid go to the
/// first index, and the refined value is never above the coarse minimum.
CircleMin minimize_circle(const std::function<double(double)>& f,
                          const SearchConfig& cfg = SearchConfig::circle());

struct TorusMin {
    std::vector<double> phases;
    double value = 0.0;
};

/// Full coarse grid over [0, 2*pi)^dims followed by golden-section line
/// searches cycled over the coordinate axes and the pairwise diagonals
/// (axis-only descent can stall on the kinked l1 objectives). Guarded at
/// dims <= 3 to keep the grid size bounded (the largest system certified
/// here is two qubits).
TorusMin minimize_torus(const std::function<double(const std::vector<double>&)>& f,
                        std::size_t dims, const SearchConfig& cfg = SearchConfig::torus());

struct IntervalMin {
    double point = 0.0;
    double value = 0.0;
};

/// Minimize over [lo, hi]. A degenerate interval returns (lo, f(lo)).
IntervalMin minimize_interval(const std::function<double(double)>& f, double lo, double hi,
                              const SearchConfig& cfg);

}  // namespace cohpow
