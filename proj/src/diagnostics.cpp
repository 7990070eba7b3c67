#include "flock/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "flock/control_law.hpp"

namespace flock {

LaplacianPair build_laplacians(const FlockState& flock, const ControlParams& p)
{
    const auto& a = flock.agents;
    const auto k = static_cast<Eigen::Index>(a.size());
    LaplacianPair out{Eigen::MatrixXd::Zero(k, k), Eigen::MatrixXd::Zero(k, k)};

    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            const double r = squared_distance(a[i].position, a[j].position);
            double f = 0.0;
            try {
                f = repulsion_kernel(r, p) - cohesion_kernel(r, p);
            } catch (DistanceBoundViolation& e) {
                e.at_pair(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
                throw;
            }
            const double w = alignment_weight(r, p);
            out.alignment(i, j) = out.alignment(j, i) = -w;
            out.kernel(i, j) = out.kernel(j, i) = -f;
        }
    }
    // Degree on the diagonal, computed from the off-diagonals so rows sum to 0.
    for (Eigen::Index i = 0; i < k; ++i) {
        out.alignment(i, i) = -out.alignment.row(i).sum();
        out.kernel(i, i) = -out.kernel.row(i).sum();
    }
    return out;
}

Eigen::MatrixXd stacked_positions(const FlockState& flock)
{
    Eigen::MatrixXd m(static_cast<Eigen::Index>(flock.size()), 2);
    for (std::size_t i = 0; i < flock.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        m(row, 0) = flock.agents[i].position.x();
        m(row, 1) = flock.agents[i].position.y();
    }
    return m;
}

Eigen::MatrixXd stacked_velocities(const FlockState& flock)
{
    Eigen::MatrixXd m(static_cast<Eigen::Index>(flock.size()), 2);
    for (std::size_t i = 0; i < flock.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        m(row, 0) = flock.agents[i].velocity.x();
        m(row, 1) = flock.agents[i].velocity.y();
    }
    return m;
}

std::vector<Vec2> laplacian_form_inputs(const FlockState& flock, const ControlParams& p)
{
    const LaplacianPair lap = build_laplacians(flock, p);
    const Eigen::MatrixXd u = -lap.alignment * stacked_velocities(flock) +
                              velocity_dispersion(flock) * (lap.kernel * stacked_positions(flock));
    std::vector<Vec2> out(flock.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto row = static_cast<Eigen::Index>(i);
        out[i] = Vec2{u(row, 0), u(row, 1)};
    }
    return out;
}

VelocityProjection project_velocity(const FlockState& flock)
{
    VelocityProjection out;
    const std::size_t k = flock.size();
    if (k == 0)
        return out;
    for (const auto& agent : flock.agents)
        out.mean += agent.velocity;
    out.mean *= 1.0 / static_cast<double>(k);

    double sq = 0.0;
    out.residual.reserve(k);
    for (const auto& agent : flock.agents) {
        out.residual.push_back(agent.velocity - out.mean);
        sq += out.residual.back().squared_norm();
    }
    out.residual_norm = std::sqrt(sq);
    return out;
}

double kernel_integral(double from, double to, double pole, int theta)
{
    if ((from - pole) * (to - pole) <= 0.0)
        throw std::domain_error("kernel_integral: interval touches the pole");
    if (theta == 1)
        return std::log(std::abs(to - pole)) - std::log(std::abs(from - pole));
    const double e = 1.0 - theta;
    return (std::pow(to - pole, e) - std::pow(from - pole, e)) / e;
}

double energy(const FlockState& flock, const ControlParams& p)
{
    const auto& a = flock.agents;
    const double top = p.d1 - p.delta;
    double potential = 0.0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double r = squared_distance(a[i].position, a[j].position);
            if (!(r > p.d0))
                throw DistanceBoundViolation(Bound::Lower, r).at_pair(j, i);
            if (!(r < p.d1))
                throw DistanceBoundViolation(Bound::Upper, r).at_pair(j, i);
            potential += kernel_integral(r, top, p.d0, p.theta) -
                         kernel_integral(r, top, p.d1, p.theta);
        }
    }
    return project_velocity(flock).residual_norm + 0.5 * potential;
}

DiagnosticsRecord diagnose(const FlockState& flock, const ControlParams& p)
{
    DiagnosticsRecord rec;
    rec.time = flock.time;
    rec.dispersion = velocity_dispersion(flock);
    const auto proj = project_velocity(flock);
    rec.mean_velocity = proj.mean;
    rec.projected_speed_norm = proj.residual_norm;

    const auto& a = flock.agents;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double dist_sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double r = squared_distance(a[i].position, a[j].position);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            dist_sum += std::sqrt(r);
            ++pairs;
        }
    }
    rec.min_sq_dist = pairs ? lo : 0.0;
    rec.max_sq_dist = hi;
    rec.avg_distance = pairs ? dist_sum / static_cast<double>(pairs) : 0.0;

    if (pairs && lo > p.d0 && hi < p.d1)
        rec.energy = energy(flock, p);
    else if (pairs)
        rec.energy = std::numeric_limits<double>::quiet_NaN();
    else
        rec.energy = proj.residual_norm;
    return rec;
}

}  // namespace flock
