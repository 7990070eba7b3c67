#include "flock/cli/execute.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <stdexcept>

#include "flock/cli/io.hpp"

namespace flock::cli {

RunSummary summarize(const RunResult& result, const ScenarioSpec& spec,
                     const MonitorTolerances& tol)
{
    RunSummary s;
    s.law = spec.law;
    s.completed = result.completed;
    s.violation = result.violation;

    Monitor monitor(spec.params, tol, spec.leader.has_value());
    const auto& samples = result.trajectory.samples;
    s.min_sq_dist = std::numeric_limits<double>::infinity();
    s.min_avg_distance = std::numeric_limits<double>::infinity();
    for (const auto& sample : samples) {
        const auto& d = sample.diagnostics;
        monitor.observe(d);
        s.min_sq_dist = std::min(s.min_sq_dist, d.min_sq_dist);
        s.max_sq_dist = std::max(s.max_sq_dist, d.max_sq_dist);
        s.min_avg_distance = std::min(s.min_avg_distance, d.avg_distance);
        s.max_avg_distance = std::max(s.max_avg_distance, d.avg_distance);
    }
    if (!samples.empty()) {
        s.final_time = samples.back().state.time;
        s.final_avg_distance = samples.back().diagnostics.avg_distance;
    }
    s.monitor = monitor.report();
    s.convergence_time = s.monitor.first_convergence_time;
    s.settled_time = s.monitor.settled_time;
    return s;
}

namespace {

template <typename T>
nlohmann::ordered_json optional_json(const std::optional<T>& v)
{
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json params_json(const ScenarioSpec& spec)
{
    const auto& p = spec.params;
    return {{"sigma", p.sigma}, {"beta", p.beta}, {"theta", p.theta}, {"K", p.K},
            {"d0", p.d0},       {"d1", p.d1},     {"delta", p.delta}};
}

void write_file(const std::filesystem::path& path, auto&& writer)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    writer(out);
    if (!out)
        throw std::runtime_error("error while writing " + path.string());
}

void write_avg_distance_csv(std::ostream& out, const std::vector<RunResult>& results,
                            const std::vector<ControlLawKind>& laws, const ScenarioSpec& spec)
{
    out << "t";
    for (auto law : laws)
        out << ',' << to_string(law);
    out << ",lower_bound,upper_bound\n";

    const std::string lower = format_double(std::sqrt(spec.params.d0));
    const std::string upper = format_double(std::sqrt(spec.params.d1));
    const std::size_t rows = spec.integrator.steps() + 1;
    for (std::size_t n = 0; n < rows; ++n) {
        out << format_double(static_cast<double>(n) * spec.integrator.dt);
        for (const auto& r : results) {
            out << ',';
            // Halted runs leave the rest of their column empty.
            if (n < r.trajectory.samples.size())
                out << format_double(r.trajectory.samples[n].diagnostics.avg_distance);
        }
        out << ',' << lower << ',' << upper << '\n';
    }
}

}  // namespace

nlohmann::ordered_json to_json(const RunSummary& s)
{
    nlohmann::ordered_json j;
    j["law"] = std::string(to_string(s.law));
    j["completed"] = s.completed;
    if (s.violation) {
        const auto& v = *s.violation;
        j["violation"] = {{"time", v.time},
                          {"pair", {v.first, v.second}},
                          {"bound", std::string(to_string(v.bound))},
                          {"sq_dist", v.sq_dist},
                          {"halted", v.halted}};
    } else {
        j["violation"] = nullptr;
    }
    j["convergence_time"] = optional_json(s.convergence_time);
    j["settled_time"] = optional_json(s.settled_time);
    j["final_time"] = s.final_time;
    j["final_avg_distance"] = s.final_avg_distance;
    j["min_sq_dist"] = s.min_sq_dist;
    j["max_sq_dist"] = s.max_sq_dist;
    j["min_avg_distance"] = s.min_avg_distance;
    j["max_avg_distance"] = s.max_avg_distance;
    j["monitor"] = {{"energy_non_increasing", s.monitor.energy_non_increasing},
                    {"mean_velocity_conserved", s.monitor.mean_velocity_conserved},
                    {"bounds_respected", s.monitor.bounds_respected},
                    {"max_energy_increase", s.monitor.max_energy_increase},
                    {"max_mean_velocity_drift", s.monitor.max_mean_velocity_drift},
                    {"total_energy_decrease", s.monitor.total_energy_decrease}};
    return j;
}

Execution execute(const RunConfig& config)
{
    const auto laws = config.laws();

    std::vector<std::future<RunResult>> jobs;
    for (auto law : laws) {
        ScenarioSpec spec = config.spec;
        spec.law = law;
        jobs.push_back(std::async(std::launch::async, [spec] { return run(spec); }));
    }
    std::vector<RunResult> results;
    for (auto& j : jobs)
        results.push_back(j.get());

    namespace fs = std::filesystem;
    fs::create_directories(config.output_dir);

    Execution exec;
    nlohmann::ordered_json all;
    all["scenario"] = std::string(to_string(config.scenario));
    all["preset"] = config.preset;
    all["params"] = params_json(config.spec);
    all["integrator"] = {{"scheme", std::string(to_string(config.spec.integrator.scheme))},
                         {"dt", config.spec.integrator.dt},
                         {"duration", config.spec.integrator.duration}};
    all["bounds"] = {{"sqrt_d0", std::sqrt(config.spec.params.d0)},
                     {"sqrt_d1", std::sqrt(config.spec.params.d1)}};
    all["runs"] = nlohmann::ordered_json::array();

    for (std::size_t i = 0; i < laws.size(); ++i) {
        ScenarioSpec spec = config.spec;
        spec.law = laws[i];
        RunSummary summary = summarize(results[i], spec, config.tolerances);

        const fs::path dir = config.output_dir / std::string(to_string(laws[i]));
        fs::create_directories(dir);
        write_file(dir / "trajectory.csv",
                   [&](std::ostream& o) { write_trajectory_csv(o, results[i].trajectory); });
        write_file(dir / "diagnostics.csv",
                   [&](std::ostream& o) { write_diagnostics_csv(o, results[i].trajectory); });
        write_file(dir / "summary.json",
                   [&](std::ostream& o) { o << to_json(summary).dump(2) << '\n'; });

        all["runs"].push_back(to_json(summary));
        if (summary.violation)
            exec.exit_code = kExitBoundViolation;
        exec.summaries.push_back(std::move(summary));
    }

    if (laws.size() > 1)
        write_file(config.output_dir / "avg_distance.csv", [&](std::ostream& o) {
            write_avg_distance_csv(o, results, laws, config.spec);
        });
    write_file(config.output_dir / "summary.json",
               [&](std::ostream& o) { o << all.dump(2) << '\n'; });
    return exec;
}

}  // namespace flock::cli
