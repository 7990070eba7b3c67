#include "flock/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "flock/scenarios.hpp"

namespace flock::cli {

std::string_view to_string(ScenarioKind k)
{
    switch (k) {
    case ScenarioKind::Leaderless3:
        return "leaderless3";
    case ScenarioKind::LeaderFollower2:
        return "leader_follower2";
    case ScenarioKind::Custom:
        return "custom";
    }
    return "unknown";
}

std::vector<ControlLawKind> RunConfig::laws() const
{
    if (law)
        return {*law};
    return {std::begin(kAllLaws), std::end(kAllLaws)};
}

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const KeyValue& kv)
{
    const std::string& v = kv.second;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty())
        throw ConfigError(kv.first, "expected a number, got '" + v + "'");
    return out;
}

int to_int(const KeyValue& kv)
{
    const std::string& v = kv.second;
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty())
        throw ConfigError(kv.first, "expected an integer, got '" + v + "'");
    return out;
}

bool to_bool(const KeyValue& kv)
{
    const std::string& v = kv.second;
    if (v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    throw ConfigError(kv.first, "expected true or false, got '" + v + "'");
}

ScenarioKind to_scenario(const KeyValue& kv)
{
    if (kv.second == "leaderless3")
        return ScenarioKind::Leaderless3;
    if (kv.second == "leader_follower2")
        return ScenarioKind::LeaderFollower2;
    if (kv.second == "custom")
        return ScenarioKind::Custom;
    throw ConfigError(kv.first, "unknown scenario '" + kv.second +
                                    "' (expected leaderless3, leader_follower2 or custom)");
}

// "x y orientation_deg speed", separated by spaces or commas.
InitialAgent to_agent(const KeyValue& kv)
{
    std::string text = kv.second;
    for (char& c : text)
        if (c == ',')
            c = ' ';
    std::istringstream in(text);
    std::vector<double> values;
    std::string token;
    while (in >> token)
        values.push_back(to_double({kv.first, token}));
    if (values.size() != 4)
        throw ConfigError(kv.first, "expected 'x y orientation_deg speed'");
    return {{values[0], values[1]}, values[2], values[3]};
}

RunConfig base_config(ScenarioKind kind, const std::string& preset)
{
    RunConfig cfg;
    cfg.scenario = kind;
    cfg.preset = preset;
    const bool flight = preset == "flight";
    switch (kind) {
    case ScenarioKind::Leaderless3:
        cfg.spec = leaderless3();
        if (flight)
            cfg.spec.params = flight_params();
        break;
    case ScenarioKind::LeaderFollower2:
        cfg.spec = leader_follower2(ControlLawKind::Proposed, flight);
        break;
    case ScenarioKind::Custom:
        cfg.spec = ScenarioSpec{};
        cfg.spec.params = flight ? flight_params() : simulation_params();
        break;
    }
    return cfg;
}

using Setter = std::function<void(RunConfig&, const KeyValue&)>;

const std::map<std::string, Setter, std::less<>>& setters()
{
    static const std::map<std::string, Setter, std::less<>> table = {
        {"scenario.law",
         [](RunConfig& c, const KeyValue& kv) {
             if (kv.second == "all") {
                 c.law.reset();
                 return;
             }
             const auto law = parse_law(kv.second);
             if (!law)
                 throw ConfigError(kv.first, "unknown law '" + kv.second + "'");
             c.law = law;
         }},
        {"scenario.leader",
         [](RunConfig& c, const KeyValue& kv) {
             if (to_bool(kv))
                 c.spec.leader = c.spec.leader.value_or(LeaderScript{});
             else
                 c.spec.leader.reset();
         }},
        {"params.sigma", [](RunConfig& c, const KeyValue& kv) { c.spec.params.sigma = to_double(kv); }},
        {"params.alpha",
         [](RunConfig& c, const KeyValue& kv) {
             c.spec.params.sigma = to_double(kv);
             c.warnings.push_back("params.alpha is a deprecated alias for params.sigma");
         }},
        {"params.beta", [](RunConfig& c, const KeyValue& kv) { c.spec.params.beta = to_double(kv); }},
        {"params.theta", [](RunConfig& c, const KeyValue& kv) { c.spec.params.theta = to_int(kv); }},
        {"params.K", [](RunConfig& c, const KeyValue& kv) { c.spec.params.K = to_double(kv); }},
        {"params.d0", [](RunConfig& c, const KeyValue& kv) { c.spec.params.d0 = to_double(kv); }},
        {"params.d1", [](RunConfig& c, const KeyValue& kv) { c.spec.params.d1 = to_double(kv); }},
        {"params.delta", [](RunConfig& c, const KeyValue& kv) { c.spec.params.delta = to_double(kv); }},
        {"integrator.scheme",
         [](RunConfig& c, const KeyValue& kv) {
             const auto s = parse_scheme(kv.second);
             if (!s)
                 throw ConfigError(kv.first, "expected euler or rk4, got '" + kv.second + "'");
             c.spec.integrator.scheme = *s;
         }},
        {"integrator.dt", [](RunConfig& c, const KeyValue& kv) { c.spec.integrator.dt = to_double(kv); }},
        {"integrator.duration",
         [](RunConfig& c, const KeyValue& kv) { c.spec.integrator.duration = to_double(kv); }},
        {"limits.enabled", [](RunConfig& c, const KeyValue& kv) { c.spec.limits.enabled = to_bool(kv); }},
        {"limits.a_max", [](RunConfig& c, const KeyValue& kv) { c.spec.limits.a_max = to_double(kv); }},
        {"limits.v_max", [](RunConfig& c, const KeyValue& kv) { c.spec.limits.v_max = to_double(kv); }},
        {"leader.switch_time",
         [](RunConfig& c, const KeyValue& kv) {
             c.spec.leader = c.spec.leader.value_or(LeaderScript{});
             c.spec.leader->switch_time = to_double(kv);
         }},
        {"leader.amplitude",
         [](RunConfig& c, const KeyValue& kv) {
             c.spec.leader = c.spec.leader.value_or(LeaderScript{});
             c.spec.leader->amplitude = to_double(kv);
         }},
        {"vicsek.radius", [](RunConfig& c, const KeyValue& kv) { c.spec.vicsek.radius = to_double(kv); }},
        {"vicsek.update_interval",
         [](RunConfig& c, const KeyValue& kv) { c.spec.vicsek.update_interval = to_double(kv); }},
        {"monitor.energy_step",
         [](RunConfig& c, const KeyValue& kv) { c.tolerances.energy_step = to_double(kv); }},
        {"monitor.mean_velocity_drift_rate",
         [](RunConfig& c, const KeyValue& kv) { c.tolerances.mean_velocity_drift_rate = to_double(kv); }},
        {"monitor.dispersion_threshold",
         [](RunConfig& c, const KeyValue& kv) { c.tolerances.dispersion_threshold = to_double(kv); }},
        {"output.dir", [](RunConfig& c, const KeyValue& kv) { c.output_dir = kv.second; }},
    };
    return table;
}

constexpr std::string_view kAgentPrefix = "scenario.agent.";

void apply_agent(RunConfig& cfg, const KeyValue& kv)
{
    const std::string_view index_text = std::string_view(kv.first).substr(kAgentPrefix.size());
    std::size_t index = 0;
    const auto [ptr, ec] =
        std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc{} || ptr != index_text.data() + index_text.size() || index_text.empty())
        throw ConfigError(kv.first, "agent keys look like scenario.agent.<index>");
    auto& agents = cfg.spec.initial;
    if (index > agents.size())
        throw ConfigError(kv.first, "agent indices must be contiguous from 0");
    if (index == agents.size())
        agents.push_back(to_agent(kv));
    else
        agents[index] = to_agent(kv);
}

}  // namespace

KeyValue parse_assignment(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw ConfigError(trim(text), "expected key=value");
    KeyValue kv{trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
    if (kv.first.empty())
        throw ConfigError("", "empty key in '" + text + "'");
    return kv;
}

std::vector<KeyValue> parse_key_values(std::istream& in, const std::string& source)
{
    std::vector<KeyValue> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty())
            continue;
        if (body.find('=') == std::string::npos)
            throw ConfigError("", source + ":" + std::to_string(line_no) + ": expected key = value");
        out.push_back(parse_assignment(body));
    }
    return out;
}

RunConfig load_config(const std::vector<KeyValue>& entries)
{
    // Scenario and preset pick the defaults every other key overrides.
    ScenarioKind kind = ScenarioKind::Leaderless3;
    std::string preset = "simulation";
    for (const auto& kv : entries) {
        if (kv.first == "scenario.name")
            kind = to_scenario(kv);
        else if (kv.first == "scenario.preset") {
            if (kv.second != "simulation" && kv.second != "flight")
                throw ConfigError(kv.first, "expected simulation or flight, got '" + kv.second + "'");
            preset = kv.second;
        }
    }

    RunConfig cfg = base_config(kind, preset);
    bool custom_agents_reset = false;
    for (const auto& kv : entries) {
        if (kv.first == "scenario.name" || kv.first == "scenario.preset")
            continue;
        if (kv.first.starts_with(kAgentPrefix)) {
            // Built-in scenarios are replaced wholesale by explicit agents.
            if (!custom_agents_reset && kind != ScenarioKind::Custom) {
                cfg.spec.initial.clear();
                custom_agents_reset = true;
            }
            apply_agent(cfg, kv);
            continue;
        }
        const auto it = setters().find(kv.first);
        if (it == setters().end())
            throw ConfigError(kv.first, "unknown configuration key");
        it->second(cfg, kv);
    }

    for (ControlLawKind law : cfg.laws()) {
        ScenarioSpec spec = cfg.spec;
        spec.law = law;
        for (auto& w : validate(spec))
            if (std::find(cfg.warnings.begin(), cfg.warnings.end(), w) == cfg.warnings.end())
                cfg.warnings.push_back(std::move(w));
    }
    if (!(cfg.tolerances.energy_step >= 0.0) || !(cfg.tolerances.mean_velocity_drift_rate >= 0.0) ||
        !(cfg.tolerances.dispersion_threshold > 0.0))
        throw ConfigError("monitor", "tolerances must be non-negative and the threshold positive");
    return cfg;
}

RunConfig load_config(const ConfigSources& sources)
{
    std::vector<KeyValue> entries;
    if (sources.config_file) {
        std::ifstream in(*sources.config_file);
        if (!in)
            throw ConfigError("--config", "cannot read " + sources.config_file->string());
        entries = parse_key_values(in, sources.config_file->string());
    }
    for (const auto& a : sources.assignments)
        entries.push_back(parse_assignment(a));
    if (sources.scenario)
        entries.emplace_back("scenario.name", *sources.scenario);
    if (sources.law)
        entries.emplace_back("scenario.law", *sources.law);
    std::ostringstream num;
    num.precision(17);
    if (sources.dt) {
        num << *sources.dt;
        entries.emplace_back("integrator.dt", num.str());
        num.str("");
    }
    if (sources.duration) {
        num << *sources.duration;
        entries.emplace_back("integrator.duration", num.str());
    }
    if (sources.output_dir)
        entries.emplace_back("output.dir", sources.output_dir->string());
    return load_config(entries);
}

}  // namespace flock::cli
