#include "flock/monitor.hpp"

#include <algorithm>
#include <cmath>

namespace flock {

std::string_view to_string(MonitorCheck c)
{
    switch (c) {
    case MonitorCheck::EnergyNonIncrease:
        return "energy_non_increase";
    case MonitorCheck::MeanVelocityDrift:
        return "mean_velocity_drift";
    case MonitorCheck::DistanceBounds:
        return "distance_bounds";
    case MonitorCheck::DispersionConverged:
        return "dispersion_converged";
    }
    return "unknown";
}

Monitor::Monitor(const ControlParams& params, MonitorTolerances tol, bool open_system)
    : params_(params), tol_(tol), open_system_(open_system)
{
}

std::array<MonitorVerdict, 4> Monitor::observe(const DiagnosticsRecord& rec)
{
    if (!first_)
        first_ = rec;
    const bool enforce_closed = !open_system_;

    MonitorVerdict energy{MonitorCheck::EnergyNonIncrease, rec.time, true, enforce_closed, 0.0};
    if (previous_) {
        const double increase = rec.energy - previous_->energy;
        energy.value = increase;
        // NaN energy means a pair left the admissible band.
        energy.holds = std::isfinite(increase) && increase <= tol_.energy_step;
        if (std::isfinite(increase))
            report_.max_energy_increase = std::max(report_.max_energy_increase, increase);
    }
    if (std::isfinite(rec.energy) && std::isfinite(first_->energy))
        report_.total_energy_decrease = first_->energy - rec.energy;

    const double elapsed = rec.time - first_->time;
    const double drift = (rec.mean_velocity - first_->mean_velocity).norm();
    MonitorVerdict mean{MonitorCheck::MeanVelocityDrift, rec.time, true, enforce_closed, drift};
    mean.holds = drift <= tol_.mean_velocity_drift_rate * elapsed;
    report_.max_mean_velocity_drift = std::max(report_.max_mean_velocity_drift, drift);

    MonitorVerdict bounds{MonitorCheck::DistanceBounds, rec.time, true, true, rec.min_sq_dist};
    bounds.holds = rec.min_sq_dist > params_.d0 && rec.max_sq_dist < params_.d1;

    MonitorVerdict conv{MonitorCheck::DispersionConverged, rec.time, true, false, rec.dispersion};
    conv.holds = rec.dispersion < tol_.dispersion_threshold;
    if (conv.holds) {
        if (!report_.first_convergence_time)
            report_.first_convergence_time = rec.time;
        if (!report_.settled_time)
            report_.settled_time = rec.time;
    } else {
        report_.settled_time.reset();
    }

    if (energy.enforced && !energy.holds)
        report_.energy_non_increasing = false;
    if (mean.enforced && !mean.holds)
        report_.mean_velocity_conserved = false;
    if (!bounds.holds)
        report_.bounds_respected = false;

    ++report_.steps;
    previous_ = rec;
    return {energy, mean, bounds, conv};
}

}  // namespace flock
