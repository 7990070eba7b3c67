#include "flock/types.hpp"

#include <cmath>
#include <sstream>

namespace flock {

std::string_view to_string(ControlLawKind kind)
{
    switch (kind) {
    case ControlLawKind::Proposed:
        return "proposed";
    case ControlLawKind::Model1Vicsek:
        return "model1_vicsek";
    case ControlLawKind::Model2CuckerSmale:
        return "model2_cucker_smale";
    case ControlLawKind::Model3CuckerDong:
        return "model3_cucker_dong";
    }
    return "unknown";
}

std::optional<ControlLawKind> parse_law(std::string_view name)
{
    if (name == "proposed")
        return ControlLawKind::Proposed;
    if (name == "model1_vicsek" || name == "model1" || name == "vicsek")
        return ControlLawKind::Model1Vicsek;
    if (name == "model2_cucker_smale" || name == "model2" || name == "cucker-smale")
        return ControlLawKind::Model2CuckerSmale;
    if (name == "model3_cucker_dong" || name == "model3" || name == "cucker-dong")
        return ControlLawKind::Model3CuckerDong;
    return std::nullopt;
}

bool enforces_lower_bound(ControlLawKind kind)
{
    return kind == ControlLawKind::Proposed || kind == ControlLawKind::Model3CuckerDong;
}

bool enforces_upper_bound(ControlLawKind kind) { return kind == ControlLawKind::Proposed; }

namespace {

void require_positive(double value, const char* key)
{
    if (!std::isfinite(value) || value <= 0.0)
        throw ConfigError(key, "must be a finite positive number");
}

}  // namespace

std::vector<std::string> validate(const ControlParams& p)
{
    require_positive(p.sigma, "params.sigma");
    require_positive(p.beta, "params.beta");
    require_positive(p.K, "params.K");
    require_positive(p.d0, "params.d0");
    require_positive(p.d1, "params.d1");
    require_positive(p.delta, "params.delta");
    if (p.theta <= 0)
        throw ConfigError("params.theta", "must be a positive integer");
    if (!(p.d0 < p.d1))
        throw ConfigError("params.d1", "must be greater than params.d0");
    if (!(p.delta < p.d1 - p.d0))
        throw ConfigError("params.delta", "must be smaller than d1 - d0");

    std::vector<std::string> warnings;
    if (p.beta > 0.5) {
        std::ostringstream os;
        os << "params.beta = " << p.beta
           << " exceeds 1/2; velocity convergence is only guaranteed for beta <= 1/2";
        warnings.push_back(os.str());
    }
    return warnings;
}

std::vector<std::string> validate_for(const ControlParams& p, ControlLawKind kind)
{
    auto warnings = validate(p);
    if (kind == ControlLawKind::Proposed && p.theta % 2 != 0)
        throw ConfigError("params.theta",
                          "must be even for the proposed law; an odd exponent makes the "
                          "cohesion kernel negative and turns attraction into repulsion");
    return warnings;
}

void validate(const SaturationLimits& limits)
{
    if (!limits.enabled)
        return;
    require_positive(limits.a_max, "limits.a_max");
    require_positive(limits.v_max, "limits.v_max");
}

std::string_view to_string(Bound b) { return b == Bound::Lower ? "lower" : "upper"; }

namespace {

std::string violation_message(Bound bound, double sq_dist)
{
    std::ostringstream os;
    os << "squared distance " << sq_dist << " violates the " << to_string(bound) << " bound";
    return os.str();
}

}  // namespace

DistanceBoundViolation::DistanceBoundViolation(Bound bound, double sq_dist)
    : std::runtime_error(violation_message(bound, sq_dist)), bound_(bound), sq_dist_(sq_dist)
{
}

}  // namespace flock
