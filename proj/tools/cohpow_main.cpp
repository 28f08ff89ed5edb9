#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohpow/channel_spec.hpp"
#include "cohpow/figures.hpp"
#include "cohpow/power_dispatch.hpp"
#include "cohpow/sweep.hpp"
#include "cohpow/verify.hpp"

namespace {

using namespace cohpow;

// exit codes: 0 ok, 1 verification failure, 2 spec error, 3 unsupported
// combination, 4 i/o error
struct CliError {
    int code;
    std::string message;
};

std::string fmt(double v) { return csv_number(v); }

Measure parse_measure(const std::string& s) {
    if (s == "skew") return Measure::Skew;
    if (s == "l1") return Measure::L1;
    throw CliError{2, "measure: expected 'skew' or 'l1', got '" + s + "'"};
}

Vec3 parse_direction(const std::string& s, const std::string& field) {
    if (s == "x") return {1, 0, 0};
    if (s == "y") return {0, 1, 0};
    if (s == "z") return {0, 0, 1};
    std::vector<double> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CliError{2, field + ": '" + item + "' is not a number"};
        }
    }
    if (parts.size() != 3)
        throw CliError{2, field + ": expected x|y|z or three comma-separated components"};
    Vec3 v{parts[0], parts[1], parts[2]};
    if (v.norm() < kDirectionEps) throw CliError{2, field + ": zero direction"};
    return v.normalized();
}

bool is_pauli_word(const std::string& s) {
    if (s.size() < 2) return false;
    for (char c : s)
        if (c != 'x' && c != 'y' && c != 'z') return false;
    return true;
}

Observable pauli_letter(char c) {
    switch (c) {
        case 'x': return Observable(pauli_x(), "x");
        case 'y': return Observable(pauli_y(), "y");
        default: return Observable(pauli_z(), "z");
    }
}

struct ParsedObservable {
    Observable obs;
    std::optional<Vec3> axis;  // set for single-qubit directions
};

ParsedObservable parse_observable(const std::string& s, const std::string& field) {
    if (is_pauli_word(s)) {
        Observable obs = pauli_letter(s[0]);
        std::string label(1, s[0]);
        for (std::size_t i = 1; i < s.size(); ++i) {
            label += "*";
            label += s[i];
            obs = Observable::tensor(obs, pauli_letter(s[i]), label);
        }
        return {std::move(obs), std::nullopt};
    }
    const Vec3 axis = parse_direction(s, field);
    return {Observable::pauli_axis(axis, s.size() == 1 ? s : ""), axis};
}

DensityMatrix parse_state(const std::string& s) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (s == "zero") return DensityMatrix::from_pure(PureState({1.0, 0.0}));
    if (s == "one") return DensityMatrix::from_pure(PureState({0.0, 1.0}));
    if (s == "plus") return DensityMatrix::from_pure(PureState({inv_sqrt2, inv_sqrt2}));
    if (s == "minus") return DensityMatrix::from_pure(PureState({inv_sqrt2, -inv_sqrt2}));
    const auto colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string tag = s.substr(0, colon);
        if (tag == "bloch" || tag == "mixed") {
            std::vector<double> parts;
            std::stringstream ss(s.substr(colon + 1));
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    parts.push_back(std::stod(item));
                } catch (const std::exception&) {
                    throw CliError{2, "state: '" + item + "' is not a number"};
                }
            }
            if (parts.size() != 3) throw CliError{2, "state: " + tag + " needs three components"};
            try {
                return density_from_bloch(BlochVector(parts[0], parts[1], parts[2]));
            } catch (const std::invalid_argument& err) {
                throw CliError{2, std::string("state: ") + err.what()};
            }
        }
    }
    throw CliError{2, "state: unknown state '" + s +
                          "' (expected zero|one|plus|minus|bloch:x,y,z|mixed:x,y,z)"};
}

Channel load_channel(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw CliError{2, "channel: cannot read spec file '" + spec.substr(1) + "'"};
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return channel_from_spec_string(text);
    } catch (const ChannelSpecError& err) {
        throw CliError{2, std::string("channel spec error in field '") + err.field() + "': " + err.what()};
    }
}

int cmd_coherence(const std::string& state_spec, const std::string& obs_spec,
                  const std::string& measure_name_in, const std::string& format) {
    const Measure measure = parse_measure(measure_name_in);
    const DensityMatrix rho = parse_state(state_spec);
    const ParsedObservable parsed = parse_observable(obs_spec, "obs");
    if (rho.dim() != parsed.obs.dim())
        throw CliError{2, "obs: observable dimension does not match the state"};

    const CoherenceValue value =
        measure == Measure::L1 ? c_l1(rho, parsed.obs) : c_skew(rho, parsed.obs);

    if (format == "json") {
        nlohmann::json out{{"value", value.value},
                           {"measure", measure_name(measure)},
                           {"basis", value.basis_label}};
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "value,measure,basis\n"
                  << fmt(value.value) << ',' << measure_name(measure) << ',' << value.basis_label
                  << "\n";
    } else {
        std::cout << "value = " << fmt(value.value) << "\n"
                  << "measure = " << measure_name(measure) << "\n"
                  << "basis = " << value.basis_label << "\n";
    }
    return 0;
}

int cmd_power(const std::string& channel_spec, const std::string& k_spec, const std::string& kind_in,
              const std::string& measure_name_in, bool certify, const std::string& format) {
    const Measure measure = parse_measure(measure_name_in);
    PowerKind kind;
    if (kind_in == "cohering")
        kind = PowerKind::Cohering;
    else if (kind_in == "decohering")
        kind = PowerKind::Decohering;
    else
        throw CliError{2, "kind: expected 'cohering' or 'decohering', got '" + kind_in + "'"};

    const Channel ch = load_channel(channel_spec);
    const ParsedObservable parsed = parse_observable(k_spec, "k");
    if (ch.dim() != parsed.obs.dim())
        throw CliError{2, "k: observable dimension does not match the channel"};

    PowerEvaluation eval;
    try {
        eval = evaluate_power(ch, parsed.obs, parsed.axis, measure, kind, certify);
    } catch (const UnsupportedCombination& err) {
        throw CliError{3, err.what()};
    }

    std::string witness;
    if (eval.reported.method == PowerMethod::DiscreteMax && eval.reported.witness_index >= 0) {
        witness = "basis index " + std::to_string(eval.reported.witness_index);
    } else if (eval.reported.method == PowerMethod::NumericMin) {
        witness = "phases (";
        for (std::size_t i = 0; i < eval.reported.witness_phases.size(); ++i)
            witness += (i ? "," : "") + fmt(eval.reported.witness_phases[i]);
        witness += ")";
    }

    if (format == "json") {
        nlohmann::json out{{"value", eval.reported.value},
                           {"kind", kind_in},
                           {"measure", measure_name(measure)},
                           {"method", power_method_name(eval.reported.method)},
                           {"channel", ch.label()},
                           {"k", parsed.obs.label()}};
        if (!witness.empty()) out["witness"] = witness;
        if (certify) {
            if (eval.closed_form) out["closed_form"] = *eval.closed_form;
            if (eval.numeric) out["numeric"] = *eval.numeric;
            out["gap"] = eval.gap();
        }
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "value,kind,measure,method,channel,k\n"
                  << fmt(eval.reported.value) << ',' << kind_in << ',' << measure_name(measure)
                  << ',' << power_method_name(eval.reported.method) << ',' << ch.label() << ','
                  << parsed.obs.label() << "\n";
    } else {
        std::cout << "value = " << fmt(eval.reported.value) << "\n"
                  << "kind = " << kind_in << "\n"
                  << "measure = " << measure_name(measure) << "\n"
                  << "method = " << power_method_name(eval.reported.method) << "\n"
                  << "channel = " << ch.label() << "\n"
                  << "k = " << parsed.obs.label() << "\n";
        if (!witness.empty()) std::cout << "witness = " << witness << "\n";
        if (certify) {
            if (eval.closed_form) std::cout << "closed_form = " << fmt(*eval.closed_form) << "\n";
            if (eval.numeric) std::cout << "numeric = " << fmt(*eval.numeric) << "\n";
            std::cout << "gap = " << fmt(eval.gap()) << "\n";
        }
    }
    return 0;
}

int cmd_figure(const std::string& name, const std::string& path) {
    if (name != "fig1" && name != "fig3")
        throw CliError{2, "figure: unknown figure '" + name + "' (expected fig1 or fig3)"};
    std::ofstream out(path);
    if (!out) throw CliError{4, "figure: cannot write '" + path + "'"};
    if (name == "fig1")
        write_fig1(out);
    else
        write_fig3(out);
    out.flush();
    if (!out) throw CliError{4, "figure: write to '" + path + "' failed"};
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<verify::CheckResult> checks;
    try {
        checks = verify::run_suite(suite, seed);
    } catch (const std::invalid_argument& err) {
        throw CliError{2, std::string("suite: ") + err.what()};
    }
    int failures = 0;
    for (const verify::CheckResult& check : checks) {
        std::cout << check.name << ": max deviation " << fmt(check.max_deviation) << " (tol "
                  << fmt(check.tolerance) << ") " << (check.passed ? "PASS" : "FAIL") << "\n";
        if (!check.passed) {
            ++failures;
            if (!check.detail.empty()) std::cout << "    worst at: " << check.detail << "\n";
        }
    }
    std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
              << " (suite " << suite << ", seed " << seed << ")\n";
    return failures == 0 ? 0 : 1;
}

int cmd_sweep(const std::string& channel_spec, const std::string& param, const std::string& range,
              const std::vector<std::string>& k_specs, const std::string& kind_in,
              const std::string& measure_name_in, const std::string& out_path) {
    SweepSpec spec;
    if (kind_in == "cohering")
        spec.kind = PowerKind::Cohering;
    else if (kind_in == "decohering")
        spec.kind = PowerKind::Decohering;
    else
        throw CliError{2, "kind: expected 'cohering' or 'decohering', got '" + kind_in + "'"};
    spec.measure = parse_measure(measure_name_in);

    // range: lo:hi:steps
    {
        std::stringstream ss(range);
        std::string lo_s, hi_s, steps_s;
        if (!std::getline(ss, lo_s, ':') || !std::getline(ss, hi_s, ':') ||
            !std::getline(ss, steps_s))
            throw CliError{2, "range: expected lo:hi:steps"};
        try {
            spec.lo = std::stod(lo_s);
            spec.hi = std::stod(hi_s);
            spec.steps = std::stoi(steps_s);
        } catch (const std::exception&) {
            throw CliError{2, "range: expected numeric lo:hi:steps"};
        }
        if (spec.steps < 2) throw CliError{2, "range: steps must be >= 2"};
    }

    spec.param = param;
    for (const std::string& k : k_specs) {
        spec.directions.push_back(parse_direction(k, "k"));
        spec.direction_labels.push_back(k);
    }

    std::string text = channel_spec;
    if (!channel_spec.empty() && channel_spec.front() == '@') {
        std::ifstream in(channel_spec.substr(1));
        if (!in) throw CliError{2, "channel: cannot read spec file '" + channel_spec.substr(1) + "'"};
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    spec.channel_json = text;

    std::ostringstream body;
    try {
        run_sweep(spec, body);
    } catch (const ChannelSpecError& err) {
        throw CliError{2, std::string("channel spec error in field '") + err.field() + "': " + err.what()};
    } catch (const UnsupportedCombination& err) {
        throw CliError{3, err.what()};
    } catch (const std::invalid_argument& err) {
        throw CliError{2, err.what()};
    }

    if (out_path == "-") {
        std::cout << body.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw CliError{4, "sweep: cannot write '" + out_path + "'"};
        out << body.str();
        out.flush();
        if (!out) throw CliError{4, "sweep: write to '" + out_path + "' failed"};
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherence measures and cohering/decohering power of quantum channels"};
    app.require_subcommand(1);

    std::string state_spec, obs_spec = "z", measure_in = "skew", format = "text";
    CLI::App* coherence = app.add_subcommand("coherence", "coherence of a state in a basis");
    coherence->add_option("--state", state_spec, "zero|one|plus|minus|bloch:x,y,z|mixed:x,y,z")
        ->required();
    coherence->add_option("--obs", obs_spec, "x|y|z, a direction nx,ny,nz, or a pauli word like zz");
    coherence->add_option("--measure", measure_in, "skew|l1");
    coherence->add_option("--format", format, "text|csv|json");

    std::string channel_spec, k_spec = "z", kind_in = "cohering";
    bool certify = false;
    CLI::App* power = app.add_subcommand("power", "cohering/decohering power of a channel");
    power->add_option("--channel", channel_spec, "identity|hadamard|cnot, a JSON spec, or @file")
        ->required();
    power->add_option("--k", k_spec, "x|y|z, a direction nx,ny,nz, or a pauli word like zz");
    power->add_option("--kind", kind_in, "cohering|decohering");
    power->add_option("--measure", measure_in, "skew|l1");
    power->add_flag("--certify", certify, "print closed form and numeric value with their gap");
    power->add_option("--format", format, "text|csv|json");

    std::string figure_name, figure_path;
    CLI::App* figure = app.add_subcommand("figure", "emit a parameter-scan CSV");
    figure->add_option("name", figure_name, "fig1|fig3")->required();
    figure->add_option("output", figure_path, "output CSV path")->required();

    std::string suite = "all";
    std::uint64_t seed = 1;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the certification suites");
    verify_cmd->add_option("--suite", suite, "all|unitary|bitflip|tensor|appendix");
    verify_cmd->add_option("--seed", seed, "RNG seed");

    std::string sweep_param = "p", sweep_range = "0:1:11", sweep_out = "-";
    std::vector<std::string> sweep_ks;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep a channel parameter to CSV");
    sweep_cmd->add_option("--channel", channel_spec, "JSON spec or @file")->required();
    sweep_cmd->add_option("--param", sweep_param, "spec field to sweep (e.g. p, theta)");
    sweep_cmd->add_option("--range", sweep_range, "lo:hi:steps");
    sweep_cmd->add_option("--k", sweep_ks, "direction (repeatable)")->required();
    sweep_cmd->add_option("--kind", kind_in, "cohering|decohering");
    sweep_cmd->add_option("--measure", measure_in, "skew|l1");
    sweep_cmd->add_option("--out", sweep_out, "output path or - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (coherence->parsed()) return cmd_coherence(state_spec, obs_spec, measure_in, format);
        if (power->parsed()) return cmd_power(channel_spec, k_spec, kind_in, measure_in, certify, format);
        if (figure->parsed()) return cmd_figure(figure_name, figure_path);
        if (verify_cmd->parsed()) return cmd_verify(suite, seed);
        if (sweep_cmd->parsed())
            return cmd_sweep(channel_spec, sweep_param, sweep_range, sweep_ks, kind_in, measure_in,
                             sweep_out);
    } catch (const CliError& err) {
        std::cerr << "error: " << err.message << "\n";
        return err.code;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
