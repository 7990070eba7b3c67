#include "flock/cli/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flock::cli {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& text)
{
    if (text == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size())
        throw std::runtime_error("malformed number in CSV: '" + text + "'");
    return v;
}

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

void expect_header(std::istream& in, const char* header)
{
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw std::runtime_error(std::string("expected CSV header '") + header + "'");
}

constexpr const char* kTrajectoryHeader = "t,agent_id,pos_x,pos_y,vel_x,vel_y,acc_x,acc_y";
constexpr const char* kDiagnosticsHeader =
    "t,energy,dispersion,mean_vel_x,mean_vel_y,min_sq_dist,max_sq_dist,avg_distance";

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj)
{
    out << kTrajectoryHeader << '\n';
    for (const auto& s : traj.samples) {
        const std::string t = format_double(s.state.time);
        for (std::size_t i = 0; i < s.state.size(); ++i) {
            const auto& a = s.state.agents[i];
            const Vec2 acc = i < s.inputs.size() ? s.inputs[i] : Vec2{};
            out << t << ',' << i << ',' << format_double(a.position.x()) << ','
                << format_double(a.position.y()) << ',' << format_double(a.velocity.x()) << ','
                << format_double(a.velocity.y()) << ',' << format_double(acc.x()) << ','
                << format_double(acc.y()) << '\n';
        }
    }
}

void write_diagnostics_csv(std::ostream& out, const Trajectory& traj)
{
    out << kDiagnosticsHeader << '\n';
    for (const auto& s : traj.samples) {
        const auto& d = s.diagnostics;
        out << format_double(d.time) << ',' << format_double(d.energy) << ','
            << format_double(d.dispersion) << ',' << format_double(d.mean_velocity.x()) << ','
            << format_double(d.mean_velocity.y()) << ',' << format_double(d.min_sq_dist) << ','
            << format_double(d.max_sq_dist) << ',' << format_double(d.avg_distance) << '\n';
    }
}

Trajectory read_trajectory_csv(std::istream& in)
{
    expect_header(in, kTrajectoryHeader);
    Trajectory traj;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto cells = split(line);
        if (cells.size() != 8)
            throw std::runtime_error("trajectory CSV row must have 8 columns: " + line);
        const double t = parse_double(cells[0]);
        const auto id = static_cast<std::size_t>(std::stoull(cells[1]));
        if (id == 0) {
            traj.samples.emplace_back();
            traj.samples.back().state.time = t;
        }
        if (traj.samples.empty() || traj.samples.back().state.size() != id)
            throw std::runtime_error("trajectory CSV rows out of order at: " + line);
        auto& s = traj.samples.back();
        s.state.agents.push_back({{parse_double(cells[2]), parse_double(cells[3])},
                                  {parse_double(cells[4]), parse_double(cells[5])}});
        s.inputs.push_back({parse_double(cells[6]), parse_double(cells[7])});
    }
    if (traj.samples.size() >= 2)
        traj.dt = traj.samples[1].state.time - traj.samples[0].state.time;
    return traj;
}

std::vector<DiagnosticsRecord> read_diagnostics_csv(std::istream& in)
{
    expect_header(in, kDiagnosticsHeader);
    std::vector<DiagnosticsRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto c = split(line);
        if (c.size() != 8)
            throw std::runtime_error("diagnostics CSV row must have 8 columns: " + line);
        DiagnosticsRecord d;
        d.time = parse_double(c[0]);
        d.energy = parse_double(c[1]);
        d.dispersion = parse_double(c[2]);
        d.mean_velocity = {parse_double(c[3]), parse_double(c[4])};
        d.min_sq_dist = parse_double(c[5]);
        d.max_sq_dist = parse_double(c[6]);
        d.avg_distance = parse_double(c[7]);
        out.push_back(d);
    }
    return out;
}

}  // namespace flock::cli
