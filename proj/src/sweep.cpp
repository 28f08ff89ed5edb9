#include "cohpow/sweep.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cohpow/channel_spec.hpp"
#include "cohpow/figures.hpp"

namespace cohpow {

namespace {

std::size_t sweep_thread_cap() {
    std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COHERENCE_POWER_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) cap = static_cast<std::size_t>(parsed);
    }
    return cap;
}

struct Row {
    double param = 0.0;
    Vec3 direction;
    PowerMethod method = PowerMethod::DiscreteMax;
    double value = 0.0;
};

}  // namespace

void run_sweep(const SweepSpec& spec, std::ostream& os) {
    if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (spec.directions.empty()) throw std::invalid_argument("sweep: at least one direction required");
    for (const Vec3& k : spec.directions)
        if (std::abs(k.norm() - 1.0) > kHermitianTol)
            throw std::invalid_argument("sweep: directions must be unit vectors");

    nlohmann::json base;
    try {
        base = nlohmann::json::parse(spec.channel_json);
    } catch (const nlohmann::json::parse_error& err) {
        throw ChannelSpecError("(document)", std::string("invalid JSON: ") + err.what());
    }
    if (!base.is_object() || !base.contains(spec.param) || !base.at(spec.param).is_number())
        throw ChannelSpecError(spec.param,
                               "sweep parameter '" + spec.param + "' is not a numeric field of the spec");

    const std::size_t total = spec.directions.size() * static_cast<std::size_t>(spec.steps);
    std::vector<Row> rows(total);

    auto evaluate_point = [&](std::size_t index) {
        const std::size_t dir_index = index / spec.steps;
        const int step = static_cast<int>(index % spec.steps);
        const double value = spec.lo + (spec.hi - spec.lo) * step / (spec.steps - 1);

        nlohmann::json doc = base;
        doc[spec.param] = value;
        const Channel ch = channel_from_json_text(doc.dump());

        const Vec3& k = spec.directions[dir_index];
        const Observable obs = Observable::pauli_axis(k);
        const PowerEvaluation eval =
            evaluate_power(ch, obs, k, spec.measure, spec.kind, false, SearchConfig::circle());

        rows[index] = {value, k, eval.reported.method, eval.reported.value};
    };

    const std::size_t threads = std::min(sweep_thread_cap(), total);
    if (threads <= 1) {
        for (std::size_t i = 0; i < total; ++i) evaluate_point(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < total; i += threads) evaluate_point(i);
            });
        }
        for (std::thread& th : pool) th.join();
    }

    os << "param,kx,ky,kz,kind,measure,method,value\n";
    const char* kind_name = spec.kind == PowerKind::Cohering ? "cohering" : "decohering";
    for (const Row& row : rows) {
        os << csv_number(row.param) << ',' << csv_number(row.direction.x) << ','
           << csv_number(row.direction.y) << ',' << csv_number(row.direction.z) << ',' << kind_name
           << ',' << measure_name(spec.measure) << ',' << power_method_name(row.method) << ','
           << csv_number(row.value) << '\n';
    }
}

}  // namespace cohpow
