#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flock/dynamics.hpp"

namespace flock::cli {

/// Doubles are printed with 17 significant digits so that parsing the text
/// back yields the identical bit pattern.
std::string format_double(double v);
double parse_double(const std::string& text);

// Columns: t, agent_id, pos_x, pos_y, vel_x, vel_y, acc_x, acc_y
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
// Columns: t, energy, dispersion, mean_vel_x, mean_vel_y, min_sq_dist, max_sq_dist, avg_distance
void write_diagnostics_csv(std::ostream& out, const Trajectory& traj);

/// Rebuilds states and inputs from a trajectory CSV. Diagnostics are not
/// part of that file and are left default-initialised; dt is taken from the
/// first two time stamps.
Trajectory read_trajectory_csv(std::istream& in);
std::vector<DiagnosticsRecord> read_diagnostics_csv(std::istream& in);

}  // namespace flock::cli
