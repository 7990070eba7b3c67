#include "flock/control_law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flock {

double alignment_weight(double sq_dist, const ControlParams& p)
{
    return p.K / std::pow(p.sigma * p.sigma + sq_dist, p.beta);
}

double velocity_dispersion(const FlockState& flock)
{
    const auto& a = flock.agents;
    const std::size_t k = a.size();
    if (k == 0)
        return 0.0;
    double sum = 0.0;
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j)
            sum += (a[i].velocity - a[j].velocity).squared_norm();
    return std::sqrt(sum / static_cast<double>(k));
}

double repulsion_kernel(double sq_dist, const ControlParams& p)
{
    if (!(sq_dist > p.d0))
        throw DistanceBoundViolation(Bound::Lower, sq_dist);
    return std::pow(sq_dist - p.d0, -p.theta);
}

double cohesion_kernel(double sq_dist, const ControlParams& p)
{
    if (!(sq_dist < p.d1))
        throw DistanceBoundViolation(Bound::Upper, sq_dist);
    return std::pow(sq_dist - p.d1, -p.theta);
}

namespace {

Vec2 alignment_term(const FlockState& flock, std::size_t i, const ControlParams& p)
{
    const auto& a = flock.agents;
    Vec2 u;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j == i)
            continue;
        const double r = squared_distance(a[i].position, a[j].position);
        u += alignment_weight(r, p) * (a[j].velocity - a[i].velocity);
    }
    return u;
}

// sum_{j != i} (f0 - f1)(r_ij) (x_i - x_j), optionally without the cohesion part.
Vec2 barrier_term(const FlockState& flock, std::size_t i, const ControlParams& p, bool cohesion)
{
    const auto& a = flock.agents;
    Vec2 u;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j == i)
            continue;
        const Vec2 d = a[i].position - a[j].position;
        const double r = d.squared_norm();
        try {
            double w = repulsion_kernel(r, p);
            if (cohesion)
                w -= cohesion_kernel(r, p);
            u += w * d;
        } catch (DistanceBoundViolation& e) {
            e.at_pair(std::min(i, j), std::max(i, j));
            throw;
        }
    }
    return u;
}

Vec2 input_with_dispersion(ControlLawKind kind, const FlockState& flock, std::size_t i,
                           const ControlParams& p, double dispersion)
{
    switch (kind) {
    case ControlLawKind::Proposed:
        return alignment_term(flock, i, p) + dispersion * barrier_term(flock, i, p, true);
    case ControlLawKind::Model2CuckerSmale:
        return alignment_term(flock, i, p);
    case ControlLawKind::Model3CuckerDong:
        return alignment_term(flock, i, p) + barrier_term(flock, i, p, false);
    case ControlLawKind::Model1Vicsek:
        break;
    }
    throw std::invalid_argument("the Vicsek baseline is a discrete heading update, not an "
                                "acceleration law");
}

void check_index(const FlockState& flock, std::size_t i)
{
    if (i >= flock.size())
        throw std::out_of_range("agent index out of range");
}

}  // namespace

Vec2 control_input(const FlockState& flock, std::size_t agent_index, const ControlParams& p)
{
    check_index(flock, agent_index);
    return input_with_dispersion(ControlLawKind::Proposed, flock, agent_index, p,
                                 velocity_dispersion(flock));
}

Vec2 baseline_control_input(ControlLawKind kind, const FlockState& flock, std::size_t agent_index,
                            const ControlParams& p)
{
    check_index(flock, agent_index);
    return input_with_dispersion(kind, flock, agent_index, p, 0.0);
}

std::vector<Vec2> control_inputs(ControlLawKind kind, const FlockState& flock,
                                 const ControlParams& p)
{
    const double dispersion = kind == ControlLawKind::Proposed ? velocity_dispersion(flock) : 0.0;
    std::vector<Vec2> out;
    out.reserve(flock.size());
    for (std::size_t i = 0; i < flock.size(); ++i)
        out.push_back(input_with_dispersion(kind, flock, i, p, dispersion));
    return out;
}

}  // namespace flock
