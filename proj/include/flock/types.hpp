#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flock/vec.hpp"

namespace flock {

struct AgentState
{
    Vec2 position;  // m
    Vec2 velocity;  // m/s
};

struct FlockState
{
    double time = 0.0;  // s
    std::vector<AgentState> agents;

    std::size_t size() const { return agents.size(); }
};

/// Tunable parameters of the flocking law. Distances d0 and d1 bound the
/// pairwise *squared* distance; delta is the cutoff below d1 used as the upper
/// limit of the energy integral.
struct ControlParams
{
    double sigma = 1.0;
    double beta = 0.5;
    int theta = 2;
    double K = 1.0;
    double d0 = 1.0;
    double d1 = 2.25;
    double delta = 1e-6;
};

struct SaturationLimits
{
    double a_max = 2.5;  // m/s^2
    double v_max = 0.5;  // m/s
    bool enabled = false;
};

enum class ControlLawKind
{
    Proposed,
    Model1Vicsek,
    Model2CuckerSmale,
    Model3CuckerDong,
};

inline constexpr ControlLawKind kAllLaws[] = {
    ControlLawKind::Proposed,
    ControlLawKind::Model1Vicsek,
    ControlLawKind::Model2CuckerSmale,
    ControlLawKind::Model3CuckerDong,
};

std::string_view to_string(ControlLawKind kind);
/// Accepts canonical names plus short aliases ("model1", "vicsek", ...).
std::optional<ControlLawKind> parse_law(std::string_view name);

/// Whether the law carries a barrier kernel at the given bound. A law that has
/// no kernel at a bound keeps running after crossing it.
bool enforces_lower_bound(ControlLawKind kind);
bool enforces_upper_bound(ControlLawKind kind);

class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key))
    {
    }
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

/// Checks the invariants every law relies on. Throws ConfigError naming the
/// offending parameter; returns non-fatal warnings.
std::vector<std::string> validate(const ControlParams& p);
/// validate() plus the law-specific constraints (even theta for the proposed
/// law, which needs an attractive cohesion kernel).
std::vector<std::string> validate_for(const ControlParams& p, ControlLawKind kind);
void validate(const SaturationLimits& limits);

enum class Bound
{
    Lower,
    Upper,
};

std::string_view to_string(Bound b);

/// A pairwise squared distance reached or crossed d0 (lower) or d1 (upper).
class DistanceBoundViolation : public std::runtime_error
{
  public:
    DistanceBoundViolation(Bound bound, double sq_dist);

    Bound bound() const { return bound_; }
    double sq_dist() const { return sq_dist_; }
    std::optional<std::pair<std::size_t, std::size_t>> pair() const { return pair_; }
    double time() const { return time_; }

    DistanceBoundViolation& at_pair(std::size_t i, std::size_t j)
    {
        pair_ = std::pair{i, j};
        return *this;
    }
    DistanceBoundViolation& at_time(double t)
    {
        time_ = t;
        return *this;
    }

  private:
    Bound bound_;
    double sq_dist_;
    std::optional<std::pair<std::size_t, std::size_t>> pair_;
    double time_ = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace flock
