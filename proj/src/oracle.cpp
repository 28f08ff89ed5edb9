#include "cohpow/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cohpow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Best {
    double x = 0.0;
    double f = 0.0;

    void offer(double xc, double fc) {
        if (fc < f) {
            x = xc;
            f = fc;
        }
    }
};

// Golden-section search on [a, b], seeded with an already-known best point.
// Only strict improvements replace the seed, so a constant objective keeps
// its coarse-grid argmin.
Best golden_refine(const std::function<double(double)>& f, double a, double b, Best best,
                   double tol, int max_iters) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    best.offer(x1, f1);
    best.offer(x2, f2);
    for (int iter = 0; iter < max_iters && (b - a) > tol; ++iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
            best.offer(x1, f1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
            best.offer(x2, f2);
        }
    }
    return best;
}

double wrap_angle(double x) {
    double w = std::fmod(x, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

}  // namespace

void SearchConfig::validate() const {
    if (coarse_points < 8) throw std::invalid_argument("SearchConfig: coarse_points must be >= 8");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("SearchConfig: refine_tol must be positive");
    if (max_refine_iters < 0) throw std::invalid_argument("SearchConfig: max_refine_iters must be >= 0");
}

CircleMin minimize_circle(const std::function<double(double)>& f, const SearchConfig& cfg) {
    cfg.validate();
    const int n = cfg.coarse_points;
    const double step = kTwoPi / n;

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = f(step * i);

    Best best{0.0, values[0]};
    for (int i = 1; i < n; ++i) best.offer(step * i, values[i]);

    // refine every coarse basin: the global minimum can hide in a narrow
    // valley whose grid samples sit above another basin's best point
    auto wrapped = [&f](double x) { return f(wrap_angle(x)); };
    for (int i = 0; i < n; ++i) {
        const double left = values[(i + n - 1) % n];
        const double right = values[(i + 1) % n];
        if (values[i] > left || values[i] > right) continue;
        const Best refined = golden_refine(wrapped, step * i - step, step * i + step,
                                           Best{step * i, values[i]}, cfg.refine_tol,
                                           cfg.max_refine_iters);
        best.offer(refined.x, refined.f);
    }
    return {wrap_angle(best.x), best.f};
}

TorusMin minimize_torus(const std::function<double(const std::vector<double>&)>& f,
                        std::size_t dims, const SearchConfig& cfg) {
    cfg.validate();
    if (dims == 0) throw std::invalid_argument("minimize_torus: need at least one dimension");
    if (dims > 3) throw std::invalid_argument("minimize_torus: dimension guard exceeded (max 3)");

    const int n = cfg.coarse_points;
    const double step = kTwoPi / n;

    std::vector<double> point(dims, 0.0);
    std::vector<double> best_point = point;
    double best_value = f(point);

    std::vector<int> index(dims, 0);
    while (true) {
        // advance the multi-index (row-major, last coordinate fastest)
        std::size_t carry = dims;
        while (carry > 0) {
            if (++index[carry - 1] < n) break;
            index[carry - 1] = 0;
            --carry;
        }
        if (carry == 0) break;
        for (std::size_t d = 0; d < dims; ++d) point[d] = step * index[d];
        const double value = f(point);
        if (value < best_value) {
            best_value = value;
            best_point = point;
        }
    }

    // Line-search refinement over the coordinate axes plus the pairwise
    // diagonals. The l1 objectives have |.| valleys that can descend along
    // a diagonal while every single axis is locally flat, so axis-only
    // coordinate descent may stall a little above the minimum.
    std::vector<std::vector<double>> directions;
    for (std::size_t d = 0; d < dims; ++d) {
        std::vector<double> axis(dims, 0.0);
        axis[d] = 1.0;
        directions.push_back(axis);
    }
    for (std::size_t i = 0; i < dims; ++i)
        for (std::size_t j = i + 1; j < dims; ++j)
            for (double sj : {1.0, -1.0}) {
                std::vector<double> diag(dims, 0.0);
                diag[i] = 1.0;
                diag[j] = sj;
                directions.push_back(diag);
            }

    std::vector<double> current = best_point;
    for (int pass = 0; pass < cfg.max_refine_iters; ++pass) {
        double largest_move = 0.0;
        for (const std::vector<double>& dir : directions) {
            auto line = [&](double t) {
                std::vector<double> probe = current;
                for (std::size_t d = 0; d < dims; ++d) probe[d] = wrap_angle(probe[d] + t * dir[d]);
                return f(probe);
            };
            Best b{0.0, best_value};
            b = golden_refine(line, -step, step, b, cfg.refine_tol, cfg.max_refine_iters);
            if (b.x != 0.0) {
                for (std::size_t d = 0; d < dims; ++d)
                    current[d] = wrap_angle(current[d] + b.x * dir[d]);
                largest_move = std::max(largest_move, std::abs(b.x));
            }
            best_value = b.f;
        }
        if (largest_move < cfg.refine_tol) break;
    }

    return {current, best_value};
}

IntervalMin minimize_interval(const std::function<double(double)>& f, double lo, double hi,
                              const SearchConfig& cfg) {
    cfg.validate();
    if (lo > hi) throw std::invalid_argument("minimize_interval: lo > hi");
    if (lo == hi) return {lo, f(lo)};

    const int n = cfg.coarse_points;
    const double step = (hi - lo) / (n - 1);

    std::vector<double> points(n), values(n);
    for (int i = 0; i < n; ++i) {
        points[i] = (i == n - 1) ? hi : lo + step * i;
        values[i] = f(points[i]);
    }

    Best best{points[0], values[0]};
    for (int i = 1; i < n; ++i) best.offer(points[i], values[i]);

    for (int i = 0; i < n; ++i) {
        if (i > 0 && values[i] > values[i - 1]) continue;
        if (i + 1 < n && values[i] > values[i + 1]) continue;
        const double a = std::max(lo, points[i] - step);
        const double b = std::min(hi, points[i] + step);
        const Best refined =
            golden_refine(f, a, b, Best{points[i], values[i]}, cfg.refine_tol, cfg.max_refine_iters);
        best.offer(refined.x, refined.f);
    }
    return {best.x, best.f};
}

}  // namespace cohpow
