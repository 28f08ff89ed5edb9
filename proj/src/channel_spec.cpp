#include "cohpow/channel_spec.hpp"

#include <cmath>
#include <set>
#include <vector>

#include <json.hpp>

namespace cohpow {

namespace {

using nlohmann::json;

double number_field(const json& j, const std::string& key) {
    const json& v = j.at(key);
    if (!v.is_number()) throw ChannelSpecError(key, "field '" + key + "' must be a number");
    return v.get<double>();
}

void check_keys(const json& j, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw ChannelSpecError(it.key(), "unknown field '" + it.key() + "' in channel spec");
    for (const std::string& key : allowed)
        if (!j.contains(key))
            throw ChannelSpecError(key, "channel spec is missing field '" + key + "'");
}

Channel parse_spec(const json& j);

Channel parse_unitary(const json& j) {
    check_keys(j, {"type", "axis", "theta"});
    const json& axis = j.at("axis");
    if (!axis.is_array() || axis.size() != 3)
        throw ChannelSpecError("axis", "field 'axis' must be an array of 3 numbers");
    Vec3 n{};
    for (int i = 0; i < 3; ++i) {
        if (!axis[i].is_number())
            throw ChannelSpecError("axis", "field 'axis' must be an array of 3 numbers");
    }
    n = {axis[0].get<double>(), axis[1].get<double>(), axis[2].get<double>()};
    if (n.norm() < kDirectionEps)
        throw ChannelSpecError("axis", "field 'axis' must be a nonzero direction");
    return unitary_rotation(n.normalized(), number_field(j, "theta"));
}

Channel parse_probability_channel(const json& j, const std::string& type) {
    check_keys(j, {"type", "p"});
    const double p = number_field(j, "p");
    if (!(p >= 0.0 && p <= 1.0))
        throw ChannelSpecError("p", "field 'p' must lie in [0, 1]");
    if (type == "depolarizing") return depolarizing(p);
    if (type == "bitflip") return bit_flip(p);
    return phase_flip(p);
}

Channel parse_tensor(const json& j) {
    check_keys(j, {"type", "factors"});
    const json& factors = j.at("factors");
    if (!factors.is_array() || factors.empty())
        throw ChannelSpecError("factors", "field 'factors' must be a nonempty array of specs");
    std::vector<Channel> parsed;
    parsed.reserve(factors.size());
    for (const json& f : factors) parsed.push_back(parse_spec(f));
    return tensor(parsed);
}

Channel parse_kraus(const json& j) {
    check_keys(j, {"type", "kraus"});
    const json& ops = j.at("kraus");
    if (!ops.is_array() || ops.empty())
        throw ChannelSpecError("kraus", "field 'kraus' must be a nonempty array of operators");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(ops.size());
    for (const json& op : ops) {
        if (!op.is_array() || op.empty())
            throw ChannelSpecError("kraus", "each Kraus operator must be a nonempty array of [re,im] pairs");
        const double root = std::sqrt(static_cast<double>(op.size()));
        const std::size_t d = static_cast<std::size_t>(std::llround(root));
        if (d * d != op.size())
            throw ChannelSpecError("kraus", "Kraus operator entry count must be a perfect square");
        std::vector<Complex> entries;
        entries.reserve(op.size());
        for (const json& e : op) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ChannelSpecError("kraus", "Kraus entries must be [re,im] number pairs");
            entries.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        kraus.emplace_back(d, std::move(entries));
    }
    try {
        return Channel(std::move(kraus), "kraus");
    } catch (const std::invalid_argument& err) {
        throw ChannelSpecError("kraus", err.what());
    }
}

Channel parse_spec(const json& j) {
    if (!j.is_object()) throw ChannelSpecError("type", "channel spec must be a JSON object");
    if (!j.contains("type") || !j.at("type").is_string())
        throw ChannelSpecError("type", "channel spec requires a string field 'type'");
    const std::string type = j.at("type").get<std::string>();

    if (type == "unitary") return parse_unitary(j);
    if (type == "depolarizing" || type == "bitflip" || type == "phaseflip")
        return parse_probability_channel(j, type);
    if (type == "cnot") {
        check_keys(j, {"type"});
        return cnot();
    }
    if (type == "tensor") return parse_tensor(j);
    if (type == "kraus") return parse_kraus(j);
    throw ChannelSpecError("type", "unknown channel type '" + type + "'");
}

}  // namespace

Channel channel_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ChannelSpecError("(document)", std::string("invalid JSON: ") + err.what());
    }
    return parse_spec(j);
}

Channel channel_from_spec_string(const std::string& spec) {
    const auto first = spec.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && spec[first] == '{') return channel_from_json_text(spec);
    if (spec == "identity") return identity_channel(2);
    if (spec == "hadamard") return hadamard();
    if (spec == "cnot") return cnot();
    throw ChannelSpecError("channel", "unknown channel '" + spec + "' (expected a name or a JSON spec)");
}

}  // namespace cohpow
