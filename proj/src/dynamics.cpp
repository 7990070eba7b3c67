#include "flock/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "flock/control_law.hpp"

namespace flock {

std::string_view to_string(IntegrationScheme s)
{
    return s == IntegrationScheme::Euler ? "euler" : "rk4";
}

std::optional<IntegrationScheme> parse_scheme(std::string_view name)
{
    if (name == "euler" || name == "Euler")
        return IntegrationScheme::Euler;
    if (name == "rk4" || name == "RK4")
        return IntegrationScheme::RK4;
    return std::nullopt;
}

std::size_t IntegratorConfig::steps() const
{
    return static_cast<std::size_t>(std::llround(duration / dt));
}

namespace {

void require(bool ok, const char* key, const char* what)
{
    if (!ok)
        throw ConfigError(key, what);
}

}  // namespace

std::vector<std::string> validate(const ScenarioSpec& spec)
{
    auto warnings = validate_for(spec.params, spec.law);
    validate(spec.limits);

    const auto& in = spec.integrator;
    require(std::isfinite(in.dt) && in.dt > 0.0, "integrator.dt", "must be positive");
    require(std::isfinite(in.duration) && in.duration > 0.0, "integrator.duration",
            "must be positive");
    require(in.dt <= in.duration, "integrator.dt", "must not exceed integrator.duration");

    if (spec.leader) {
        require(std::isfinite(spec.leader->switch_time) && spec.leader->switch_time > 0.0,
                "leader.switch_time", "must be positive");
        require(std::isfinite(spec.leader->amplitude), "leader.amplitude", "must be finite");
    }
    if (spec.law == ControlLawKind::Model1Vicsek) {
        require(spec.vicsek.radius > 0.0, "vicsek.radius", "must be positive");
        require(spec.vicsek.update_interval > 0.0, "vicsek.update_interval", "must be positive");
    }

    require(spec.initial.size() >= 2, "scenario.agents", "at least two agents are required");
    for (const auto& a : spec.initial) {
        require(a.position.finite() && std::isfinite(a.orientation_deg) && std::isfinite(a.speed),
                "scenario.agents", "initial values must be finite");
        require(a.speed >= 0.0, "scenario.agents", "initial speed must be non-negative");
    }
    for (std::size_t i = 1; i < spec.initial.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double r = squared_distance(spec.initial[i].position, spec.initial[j].position);
            if (!(r > spec.params.d0 && r < spec.params.d1))
                throw ConfigError("scenario.agents",
                                  "initial squared distance between agents " + std::to_string(j) +
                                      " and " + std::to_string(i) + " is " + std::to_string(r) +
                                      ", outside (d0, d1)");
        }
    }
    return warnings;
}

Vec2 polar_to_velocity(double orientation_deg, double speed)
{
    const double rad = orientation_deg * std::numbers::pi / 180.0;
    return {speed * std::cos(rad), speed * std::sin(rad)};
}

FlockState initial_state(const ScenarioSpec& spec)
{
    FlockState s;
    s.agents.reserve(spec.initial.size());
    for (const auto& a : spec.initial)
        s.agents.push_back({a.position, polar_to_velocity(a.orientation_deg, a.speed)});
    return s;
}

Vec2 leader_input(double t, const LeaderScript& script)
{
    const double phase = std::numbers::pi * t / 180.0;
    const double sign = t < script.switch_time ? 1.0 : -1.0;
    return sign * script.amplitude * Vec2{std::sin(phase), std::cos(phase)};
}

namespace {

Vec2 cap_norm(const Vec2& v, double cap)
{
    const double n = v.norm();
    return n > cap ? v * (cap / n) : v;
}

bool is_leader(const ScenarioSpec& spec, std::size_t i) { return spec.leader && i == 0; }

}  // namespace

Vec2 saturate_acceleration(const Vec2& u, const SaturationLimits& limits)
{
    return limits.enabled ? cap_norm(u, limits.a_max) : u;
}

Vec2 clamp_velocity(const Vec2& v, const SaturationLimits& limits)
{
    return limits.enabled ? cap_norm(v, limits.v_max) : v;
}

std::vector<Vec2> accelerations(const FlockState& flock, const ScenarioSpec& spec)
{
    std::vector<Vec2> u;
    if (spec.law == ControlLawKind::Model1Vicsek)
        u.assign(flock.size(), Vec2{});
    else
        u = control_inputs(spec.law, flock, spec.params);

    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = is_leader(spec, i) ? leader_input(flock.time, *spec.leader)
                                  : saturate_acceleration(u[i], spec.limits);
    return u;
}

namespace {

struct Derivative
{
    std::vector<Vec2> dx;
    std::vector<Vec2> dv;
};

using AccelFn = std::vector<Vec2> (*)(const FlockState&, const ScenarioSpec&);

Derivative derivative(const FlockState& s, const ScenarioSpec& spec, AccelFn accel)
{
    Derivative d;
    d.dx.reserve(s.size());
    for (const auto& a : s.agents)
        d.dx.push_back(a.velocity);
    d.dv = accel(s, spec);
    return d;
}

FlockState advance(const FlockState& s, const Derivative& d, double h)
{
    FlockState out = s;
    out.time = s.time + h;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.agents[i].position += h * d.dx[i];
        out.agents[i].velocity += h * d.dv[i];
    }
    return out;
}

FlockState integrate(const FlockState& s, const ScenarioSpec& spec, AccelFn accel)
{
    const double h = spec.integrator.dt;
    if (spec.integrator.scheme == IntegrationScheme::Euler)
        return advance(s, derivative(s, spec, accel), h);

    const Derivative k1 = derivative(s, spec, accel);
    const Derivative k2 = derivative(advance(s, k1, h / 2), spec, accel);
    const Derivative k3 = derivative(advance(s, k2, h / 2), spec, accel);
    const Derivative k4 = derivative(advance(s, k3, h), spec, accel);

    FlockState out = s;
    out.time = s.time + h;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.agents[i].position +=
            (h / 6) * (k1.dx[i] + 2.0 * k2.dx[i] + 2.0 * k3.dx[i] + k4.dx[i]);
        out.agents[i].velocity +=
            (h / 6) * (k1.dv[i] + 2.0 * k2.dv[i] + 2.0 * k3.dv[i] + k4.dv[i]);
    }
    return out;
}

std::vector<Vec2> leader_only(const FlockState& s, const ScenarioSpec& spec)
{
    return {leader_input(s.time, *spec.leader)};
}

double heading_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

double vicsek_speed(const ScenarioSpec& spec)
{
    double sum = 0.0;
    for (const auto& a : spec.initial)
        sum += a.speed;
    return sum / static_cast<double>(spec.initial.size());
}

FlockState vicsek_step(const FlockState& s, const ScenarioSpec& spec)
{
    const double h = spec.integrator.dt;
    const auto n = std::llround(s.time / h);
    const auto period = std::max<long long>(1, std::llround(spec.vicsek.update_interval / h));
    const bool update = n > 0 && n % period == 0;
    const double speed = vicsek_speed(spec);
    const double r2 = spec.vicsek.radius * spec.vicsek.radius;

    FlockState out = s;
    out.time = s.time + h;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (is_leader(spec, i))
            continue;
        double heading = heading_of(s.agents[i].velocity);
        if (update) {
            double sx = 0.0;
            double sy = 0.0;
            for (const auto& other : s.agents) {
                if (squared_distance(s.agents[i].position, other.position) <= r2) {
                    const double hj = heading_of(other.velocity);
                    sx += std::cos(hj);
                    sy += std::sin(hj);
                }
            }
            heading = std::atan2(sy, sx);
        }
        const Vec2 v{speed * std::cos(heading), speed * std::sin(heading)};
        out.agents[i].velocity = v;
        out.agents[i].position = s.agents[i].position + h * v;
    }

    if (spec.leader) {
        FlockState lead;
        lead.time = s.time;
        lead.agents = {s.agents[0]};
        out.agents[0] = integrate(lead, spec, &leader_only).agents[0];
    }
    return out;
}

void check_enforced_bounds(const FlockState& s, const ScenarioSpec& spec)
{
    const bool lower = enforces_lower_bound(spec.law);
    const bool upper = enforces_upper_bound(spec.law);
    for (std::size_t i = 1; i < s.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double r = squared_distance(s.agents[i].position, s.agents[j].position);
            if (lower && !(r > spec.params.d0 + kGuardBand))
                throw DistanceBoundViolation(Bound::Lower, r).at_pair(j, i).at_time(s.time);
            if (upper && !(r < spec.params.d1 - kGuardBand))
                throw DistanceBoundViolation(Bound::Upper, r).at_pair(j, i).at_time(s.time);
        }
    }
}

std::optional<ViolationReport> first_crossing(const FlockState& s, const ControlParams& p)
{
    for (std::size_t i = 1; i < s.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const double r = squared_distance(s.agents[i].position, s.agents[j].position);
            if (!(r > p.d0 + kGuardBand))
                return ViolationReport{s.time, j, i, Bound::Lower, r, false};
            if (!(r < p.d1 - kGuardBand))
                return ViolationReport{s.time, j, i, Bound::Upper, r, false};
        }
    }
    return std::nullopt;
}

}  // namespace

FlockState step(const FlockState& flock, const ScenarioSpec& spec)
{
    FlockState next;
    if (spec.law == ControlLawKind::Model1Vicsek) {
        next = vicsek_step(flock, spec);
    } else {
        try {
            next = integrate(flock, spec, &accelerations);
        } catch (DistanceBoundViolation& e) {
            e.at_time(flock.time + spec.integrator.dt);
            throw;
        }
        for (std::size_t i = 0; i < next.size(); ++i)
            if (!is_leader(spec, i))
                next.agents[i].velocity = clamp_velocity(next.agents[i].velocity, spec.limits);
    }
    check_enforced_bounds(next, spec);
    return next;
}

RunResult run(const ScenarioSpec& spec)
{
    validate(spec);

    RunResult result;
    const double dt = spec.integrator.dt;
    const std::size_t n_steps = spec.integrator.steps();
    result.trajectory.dt = dt;
    result.trajectory.samples.reserve(n_steps + 1);

    FlockState state = initial_state(spec);
    result.trajectory.samples.push_back(
        {state, accelerations(state, spec), diagnose(state, spec.params)});

    for (std::size_t n = 0; n < n_steps; ++n) {
        FlockState next;
        try {
            next = step(state, spec);
        } catch (const DistanceBoundViolation& e) {
            const auto pair = e.pair().value_or(std::pair<std::size_t, std::size_t>{0, 0});
            result.violation = ViolationReport{static_cast<double>(n + 1) * dt, pair.first,
                                               pair.second, e.bound(), e.sq_dist(), true};
            return result;
        }
        // Stamp from the step index so times do not accumulate rounding.
        next.time = static_cast<double>(n + 1) * dt;
        if (!result.violation)
            result.violation = first_crossing(next, spec.params);
        state = std::move(next);
        result.trajectory.samples.push_back(
            {state, accelerations(state, spec), diagnose(state, spec.params)});
    }
    result.completed = true;
    return result;
}

}  // namespace flock
