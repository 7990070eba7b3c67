#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "flock/control_law.hpp"
#include "flock/dynamics.hpp"
#include "flock/scenarios.hpp"
#include "oracle/reference_law.hpp"
#include "support/random_states.hpp"

using namespace flock;
using testing_support::to_oracle;

namespace {

ScenarioSpec short_run(ScenarioSpec s, double duration, double dt = 0.01)
{
    s.integrator.duration = duration;
    s.integrator.dt = dt;
    return s;
}

double state_distance(const FlockState& a, const FlockState& b)
{
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sq += (a.agents[i].position - b.agents[i].position).squared_norm();
        sq += (a.agents[i].velocity - b.agents[i].velocity).squared_norm();
    }
    return std::sqrt(sq);
}

FlockState final_state(const ScenarioSpec& s) { return run(s).trajectory.samples.back().state; }

}  // namespace

TEST(PolarToVelocity, Examples)
{
    const Vec2 a = polar_to_velocity(0.0, 1.0);
    EXPECT_DOUBLE_EQ(a.x(), 1.0);
    EXPECT_DOUBLE_EQ(a.y(), 0.0);

    const Vec2 b = polar_to_velocity(270.0, 0.99);
    EXPECT_NEAR(b.x(), 0.0, 1e-15);
    EXPECT_NEAR(b.y(), -0.99, 1e-15);

    const Vec2 c = polar_to_velocity(45.0, 0.54);
    EXPECT_NEAR(c.x(), 0.38184, 5e-6);
    EXPECT_NEAR(c.y(), 0.38184, 5e-6);
}

TEST(LeaderInput, Examples)
{
    const LeaderScript script;
    const Vec2 a = leader_input(0.0, script);
    EXPECT_DOUBLE_EQ(a.x(), 0.0);
    EXPECT_DOUBLE_EQ(a.y(), 1.0);

    const Vec2 b = leader_input(90.0, script);
    EXPECT_NEAR(b.x(), 1.0, 1e-15);
    EXPECT_NEAR(b.y(), 0.0, 1e-15);

    // The switch instant already belongs to the negated branch.
    const Vec2 c = leader_input(125.0, script);
    EXPECT_NEAR(c.x(), -0.81915, 5e-6);
    EXPECT_NEAR(c.y(), 0.57358, 5e-6);
    const Vec2 just_before = leader_input(std::nextafter(125.0, 0.0), script);
    EXPECT_NEAR(just_before.x(), 0.81915, 5e-6);

    LeaderScript scaled{10.0, 2.0};
    EXPECT_NEAR(leader_input(5.0, scaled).x(), 2.0 * std::sin(std::numbers::pi * 5.0 / 180.0),
                1e-15);
    EXPECT_NEAR(leader_input(15.0, scaled).x(), -2.0 * std::sin(std::numbers::pi * 15.0 / 180.0),
                1e-15);
}

TEST(Saturation, Examples)
{
    SaturationLimits lim{2.5, 0.5, true};
    const Vec2 u = saturate_acceleration({3.0, 4.0}, lim);
    EXPECT_DOUBLE_EQ(u.x(), 1.5);
    EXPECT_DOUBLE_EQ(u.y(), 2.0);
    EXPECT_EQ(saturate_acceleration({1.0, 0.0}, lim), (Vec2{1.0, 0.0}));
    EXPECT_EQ(clamp_velocity({0.6, 0.0}, lim), (Vec2{0.5, 0.0}));

    lim.enabled = false;
    EXPECT_EQ(saturate_acceleration({3.0, 4.0}, lim), (Vec2{3.0, 4.0}));
    EXPECT_EQ(clamp_velocity({0.6, 0.0}, lim), (Vec2{0.6, 0.0}));
}

TEST(Saturation, CapsFollowerButNotLeader)
{
    auto spec = short_run(leader_follower2(), 20.0);
    spec.limits = {2.5, 0.5, true};
    spec.params = flight_params();
    const auto result = run(spec);
    for (const auto& s : result.trajectory.samples) {
        if (s.state.time == 0.0)
            continue;
        EXPECT_LE(s.state.agents[1].velocity.norm(), 0.5 + 1e-12);
        EXPECT_LE(s.inputs[1].norm(), 2.5 + 1e-12);
    }
    // The leader keeps accelerating past v_max.
    EXPECT_GT(result.trajectory.samples.back().state.agents[0].velocity.norm(), 1.0);
}

TEST(Step, ConsensusTranslatesRigidly)
{
    auto spec = leaderless3();
    spec.integrator.scheme = IntegrationScheme::Euler;
    auto s = initial_state(spec);
    for (auto& a : s.agents)
        a.velocity = {0.3, -0.1};
    const auto next = step(s, spec);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_DOUBLE_EQ(next.agents[i].position.x(), s.agents[i].position.x() + 0.3 * 0.01);
        EXPECT_DOUBLE_EQ(next.agents[i].position.y(), s.agents[i].position.y() - 0.1 * 0.01);
        EXPECT_EQ(next.agents[i].velocity, s.agents[i].velocity);
    }
    EXPECT_DOUBLE_EQ(next.time, 0.01);
}

TEST(Step, EulerStepMatchesReference)
{
    auto spec = leaderless3();
    spec.integrator.scheme = IntegrationScheme::Euler;
    const auto s = initial_state(spec);
    const auto next = step(s, spec);
    const auto ref = to_oracle(s);
    const double dt = spec.integrator.dt;
    for (std::size_t i = 0; i < s.size(); ++i) {
        double ux = 0, uy = 0;
        oracle::input(ref, i, to_oracle(spec.params), oracle::Law::Proposed, ux, uy);
        EXPECT_NEAR(next.agents[i].position.x(), ref.px[i] + ref.vx[i] * dt, 1e-12);
        EXPECT_NEAR(next.agents[i].position.y(), ref.py[i] + ref.vy[i] * dt, 1e-12);
        EXPECT_NEAR(next.agents[i].velocity.x(), ref.vx[i] + ux * dt, 1e-12);
        EXPECT_NEAR(next.agents[i].velocity.y(), ref.vy[i] + uy * dt, 1e-12);
    }
}

TEST(Step, SchemesConvergeToEachOther)
{
    // The opening transient is stiff, so Euler needs a small step to be in
    // its asymptotic regime.
    auto eu = short_run(leaderless3(), 1.0, 0.0025);
    eu.integrator.scheme = IntegrationScheme::Euler;
    auto eu_half = eu;
    eu_half.integrator.dt /= 2;
    auto rk = eu;
    rk.integrator.scheme = IntegrationScheme::RK4;
    rk.integrator.dt /= 4;

    const auto reference = final_state(rk);
    const double err = state_distance(final_state(eu), reference);
    const double err_half = state_distance(final_state(eu_half), reference);
    EXPECT_GT(err, 0.0);
    EXPECT_NEAR(err / err_half, 2.0, 0.3);
}

TEST(Step, ThrowsOnEnforcedBoundWithContext)
{
    auto spec = leaderless3();
    FlockState s;
    // Head-on at high speed, starting just outside the lower guard band.
    s.agents = {{{0.0, 0.0}, {5.0, 0.0}}, {{1.0 + 1e-4, 0.0}, {-5.0, 0.0}}};
    spec.initial.resize(2);
    try {
        step(s, spec);
        FAIL() << "expected a violation";
    } catch (const DistanceBoundViolation& e) {
        EXPECT_EQ(e.bound(), Bound::Lower);
        EXPECT_DOUBLE_EQ(e.time(), 0.01);
        ASSERT_TRUE(e.pair());
        EXPECT_EQ(e.pair()->first, 0u);
        EXPECT_EQ(e.pair()->second, 1u);
    }

    // Model 2 has no kernels and just passes through.
    spec.law = ControlLawKind::Model2CuckerSmale;
    EXPECT_NO_THROW(step(s, spec));
}

TEST(Step, LeaderIgnoresFlockmates)
{
    auto spec = leader_follower2();
    spec.integrator.scheme = IntegrationScheme::Euler;
    const auto s = initial_state(spec);
    const auto next = step(s, spec);
    const Vec2 expected_v = s.agents[0].velocity + 0.01 * leader_input(0.0, *spec.leader);
    EXPECT_EQ(next.agents[0].velocity, expected_v);

    const auto u = accelerations(s, spec);
    EXPECT_EQ(u[0], leader_input(0.0, *spec.leader));
    EXPECT_EQ(u[1], control_input(s, 1, spec.params));
}

TEST(Vicsek, AlignsHeadingsAtUpdateAndKeepsCommonSpeed)
{
    auto spec = short_run(leaderless3(ControlLawKind::Model1Vicsek), 3.0);
    const auto result = run(spec);
    ASSERT_TRUE(result.completed);
    const double speed = (0.54 + 0.42 + 0.99) / 3.0;
    const auto& samples = result.trajectory.samples;

    // Before the first update each agent keeps its initial heading.
    const auto& early = samples[50].state;
    EXPECT_NEAR(std::atan2(early.agents[0].velocity.y(), early.agents[0].velocity.x()),
                std::numbers::pi / 4, 1e-12);
    for (const auto& a : early.agents)
        EXPECT_NEAR(a.velocity.norm(), speed, 1e-12);

    // All three are within the radius, so one update aligns them.
    const auto& late = samples.back().state;
    for (const auto& a : late.agents) {
        EXPECT_NEAR(a.velocity.norm(), speed, 1e-12);
        EXPECT_NEAR(a.velocity.x(), late.agents[0].velocity.x(), 1e-12);
        EXPECT_NEAR(a.velocity.y(), late.agents[0].velocity.y(), 1e-12);
    }
}

TEST(Vicsek, IsolatedAgentKeepsHeading)
{
    auto spec = short_run(leaderless3(ControlLawKind::Model1Vicsek), 2.0);
    spec.vicsek.radius = 0.01;  // nobody is a neighbour
    const auto result = run(spec);
    const auto& v = result.trajectory.samples.back().state.agents[2].velocity;
    EXPECT_NEAR(std::atan2(v.y(), v.x()), -std::numbers::pi / 2, 1e-12);
}

TEST(Run, TimeStampsAndDeterminism)
{
    const auto spec = short_run(leaderless3(), 2.0);
    const auto a = run(spec);
    const auto b = run(spec);
    ASSERT_TRUE(a.completed);
    EXPECT_FALSE(a.violation.has_value());
    ASSERT_EQ(a.trajectory.samples.size(), 201u);
    for (std::size_t n = 0; n < a.trajectory.samples.size(); ++n) {
        EXPECT_EQ(a.trajectory.samples[n].state.time, static_cast<double>(n) * 0.01);
        const auto& sa = a.trajectory.samples[n].state.agents;
        const auto& sb = b.trajectory.samples[n].state.agents;
        for (std::size_t i = 0; i < sa.size(); ++i) {
            EXPECT_EQ(sa[i].position, sb[i].position);
            EXPECT_EQ(sa[i].velocity, sb[i].velocity);
        }
    }
}

TEST(Run, HaltsWithPartialTrajectoryWhenKernelBoundIsHit)
{
    auto spec = short_run(leaderless3(ControlLawKind::Model3CuckerDong), 5.0);
    spec.initial = {{{0.0, 0.0}, 0.0, 10.0}, {{1.05, 0.0}, 180.0, 10.0}};
    const auto result = run(spec);
    EXPECT_FALSE(result.completed);
    ASSERT_TRUE(result.violation.has_value());
    EXPECT_TRUE(result.violation->halted);
    EXPECT_EQ(result.violation->bound, Bound::Lower);
    EXPECT_LT(result.trajectory.samples.size(), 501u);
    EXPECT_NEAR(result.violation->time,
                result.trajectory.samples.back().state.time + spec.integrator.dt, 1e-12);
}

TEST(Run, BaselineWithoutKernelReportsAndContinues)
{
    const auto spec = short_run(leaderless3(ControlLawKind::Model2CuckerSmale), 30.0);
    const auto result = run(spec);
    EXPECT_TRUE(result.completed);
    ASSERT_TRUE(result.violation.has_value());
    EXPECT_FALSE(result.violation->halted);
    EXPECT_EQ(result.violation->bound, Bound::Lower);
    EXPECT_EQ(result.trajectory.samples.size(), 3001u);
}

TEST(Scenario, ValidationRejectsBadSpecs)
{
    auto spec = leaderless3();
    spec.initial[1].position = {0.5, 0.0};
    try {
        validate(spec);
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "scenario.agents");
    }

    spec = leaderless3();
    spec.initial.resize(1);
    EXPECT_THROW(validate(spec), ConfigError);

    spec = leaderless3();
    spec.integrator.dt = 0.0;
    EXPECT_THROW(validate(spec), ConfigError);

    spec = leaderless3();
    spec.integrator.dt = 2.0;
    spec.integrator.duration = 1.0;
    EXPECT_THROW(validate(spec), ConfigError);

    spec = leader_follower2();
    spec.leader->switch_time = 0.0;
    EXPECT_THROW(validate(spec), ConfigError);

    spec = leaderless3();
    spec.initial[0].speed = -1.0;
    EXPECT_THROW(validate(spec), ConfigError);

    EXPECT_TRUE(validate(leaderless3()).empty());
    EXPECT_TRUE(validate(leader_follower2(ControlLawKind::Proposed, true)).empty());
}

TEST(Scenario, PresetsCarryDocumentedValues)
{
    const auto p = simulation_params();
    EXPECT_EQ(p.sigma, 1.0);
    EXPECT_EQ(p.beta, 0.5);
    EXPECT_EQ(p.theta, 2);
    EXPECT_EQ(p.K, 1.0);
    EXPECT_EQ(p.d0, 1.0);
    EXPECT_EQ(p.d1, 2.25);

    const auto f = flight_params();
    EXPECT_EQ(f.d0, 1.0);
    EXPECT_EQ(f.d1, 8.0);
    EXPECT_EQ(f.beta, 0.25);
    EXPECT_EQ(f.K, 1.0);

    const auto lf = leader_follower2();
    ASSERT_TRUE(lf.leader.has_value());
    EXPECT_EQ(lf.leader->switch_time, 125.0);
    EXPECT_EQ(lf.initial[0].orientation_deg, 118.0);
    EXPECT_EQ(lf.initial[1].speed, 0.50);
    EXPECT_EQ(lf.integrator.duration, 250.0);
    EXPECT_EQ(lf.integrator.dt, 0.01);
    EXPECT_EQ(lf.integrator.scheme, IntegrationScheme::RK4);
}
