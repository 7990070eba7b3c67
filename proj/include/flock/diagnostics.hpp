#pragma once

#include <vector>

#include <Eigen/Dense>

#include "flock/types.hpp"
#include "flock/vec.hpp"

namespace flock {

/// Graph Laplacians of the flock. `alignment` is built from the weights a_ij,
/// `kernel` from f_ij = f0 - f1. Both are symmetric with zero row sums.
struct LaplacianPair
{
    Eigen::MatrixXd alignment;
    Eigen::MatrixXd kernel;
};

LaplacianPair build_laplacians(const FlockState& flock, const ControlParams& p);

/// k x 2 matrices with one agent per row.
Eigen::MatrixXd stacked_positions(const FlockState& flock);
Eigen::MatrixXd stacked_velocities(const FlockState& flock);

/// Proposed-law inputs computed through the matrix form
/// -L_alignment v + dispersion * L_kernel x.
std::vector<Vec2> laplacian_form_inputs(const FlockState& flock, const ControlParams& p);

/// Split of the stacked velocity into the consensus part (the mean velocity
/// repeated k times) and the orthogonal residual v_i - mean.
struct VelocityProjection
{
    Vec2 mean;
    std::vector<Vec2> residual;
    double residual_norm = 0.0;
};

VelocityProjection project_velocity(const FlockState& flock);

/// Closed form of the integral of (r - pole)^-theta over [from, to]. The
/// interval must not contain the pole.
double kernel_integral(double from, double to, double pole, int theta);

/// E(x, v) = |v_perp| + 1/2 sum_{i>j} integral_{r_ij}^{d1 - delta} (f0 - f1)(r) dr.
/// Throws DistanceBoundViolation when a pair is outside (d0, d1).
double energy(const FlockState& flock, const ControlParams& p);

struct DiagnosticsRecord
{
    double time = 0.0;
    double energy = 0.0;  // NaN once a pair has left (d0, d1)
    double dispersion = 0.0;
    Vec2 mean_velocity;
    double projected_speed_norm = 0.0;
    double min_sq_dist = 0.0;
    double max_sq_dist = 0.0;
    double avg_distance = 0.0;  // mean pairwise Euclidean distance, m
};

DiagnosticsRecord diagnose(const FlockState& flock, const ControlParams& p);

}  // namespace flock
