#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "flock/diagnostics.hpp"
#include "flock/types.hpp"

namespace flock {

struct MonitorTolerances
{
    double energy_step = 1e-6;              // allowed E(t+dt) - E(t)
    double mean_velocity_drift_rate = 1e-9;  // |mean(t) - mean(0)| per simulated second
    double dispersion_threshold = 1e-3;
};

enum class MonitorCheck
{
    EnergyNonIncrease,
    MeanVelocityDrift,
    DistanceBounds,
    DispersionConverged,
};

std::string_view to_string(MonitorCheck c);

struct MonitorVerdict
{
    MonitorCheck check;
    double time = 0.0;
    bool holds = true;
    /// Informational verdicts never count as failures. Energy and mean
    /// velocity are informational for open (leader-driven) systems, and the
    /// convergence flag is always informational.
    bool enforced = true;
    double value = 0.0;  // the measured quantity behind the verdict
};

struct MonitorReport
{
    bool energy_non_increasing = true;
    bool mean_velocity_conserved = true;
    bool bounds_respected = true;
    double max_energy_increase = 0.0;
    double max_mean_velocity_drift = 0.0;
    double total_energy_decrease = 0.0;
    std::optional<double> first_convergence_time;
    /// Time from which the dispersion stayed below the threshold up to the
    /// last observed record.
    std::optional<double> settled_time;
    std::size_t steps = 0;

    bool all_enforced_hold() const
    {
        return energy_non_increasing && mean_velocity_conserved && bounds_respected;
    }
};

/// Runtime checks of the properties the closed-system analysis guarantees:
/// non-increasing energy, constant mean velocity, bound keeping, and decay of
/// the velocity dispersion. Feed one DiagnosticsRecord per step, in order.
class Monitor
{
  public:
    Monitor(const ControlParams& params, MonitorTolerances tol = {}, bool open_system = false);

    std::array<MonitorVerdict, 4> observe(const DiagnosticsRecord& rec);

    const MonitorReport& report() const { return report_; }

  private:
    ControlParams params_;
    MonitorTolerances tol_;
    bool open_system_;
    std::optional<DiagnosticsRecord> first_;
    std::optional<DiagnosticsRecord> previous_;
    MonitorReport report_;
};

}  // namespace flock
