#pragma once

#include <cstddef>
#include <vector>

#include "flock/types.hpp"
#include "flock/vec.hpp"

namespace flock {

inline double squared_distance(const Vec2& a, const Vec2& b) { return (a - b).squared_norm(); }

/// Velocity-matching weight K / (sigma^2 + r)^beta for a pair at squared
/// distance r. Strictly decreasing in r.
double alignment_weight(double sq_dist, const ControlParams& p);

/// Regulator sqrt((1/k) * sum_{i>j} |v_i - v_j|^2). Divides by the agent
/// count k, not the number of pairs.
double velocity_dispersion(const FlockState& flock);

/// (r - d0)^-theta. Throws DistanceBoundViolation(Lower) when r <= d0.
double repulsion_kernel(double sq_dist, const ControlParams& p);

/// (r - d1)^-theta. Throws DistanceBoundViolation(Upper) when r >= d1.
double cohesion_kernel(double sq_dist, const ControlParams& p);

/// Commanded acceleration of one agent under the proposed law:
///
///   u_i = sum_j a_ij (v_j - v_i)
///       + L(v) sum_{j != i} f0(|x_i - x_j|^2) (x_i - x_j)
///       + L(v) sum_{j != i} f1(|x_i - x_j|^2) (x_j - x_i)
///
/// Only relative displacements and velocities enter. Kernel violations are
/// rethrown with the offending pair attached.
Vec2 control_input(const FlockState& flock, std::size_t agent_index, const ControlParams& p);

/// Continuous-time baselines. Model 2 is alignment only; Model 3 adds the
/// unregulated f0 repulsion. Model 1 (Vicsek) is a discrete heading update and
/// is rejected here with std::invalid_argument.
Vec2 baseline_control_input(ControlLawKind kind, const FlockState& flock, std::size_t agent_index,
                            const ControlParams& p);

/// Inputs for every agent under `kind`, sharing the dispersion computation.
std::vector<Vec2> control_inputs(ControlLawKind kind, const FlockState& flock,
                                 const ControlParams& p);

}  // namespace flock
