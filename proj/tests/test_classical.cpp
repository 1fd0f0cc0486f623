#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "landau/classical.hpp"

using namespace landau;

namespace {
const PhysicalParams nat{};
const double kTwoPi = 2.0 * M_PI;

double max_invariant_drift(GaugeId g, const std::vector<ClassicalState>& traj,
                           const PhysicalParams& p) {
    const auto ref = invariants_eval(g, traj.front(), p);
    double worst = 0.0;
    for (const auto& s : traj) {
        const auto cur = invariants_eval(g, s, p);
        for (int i = 0; i < 3; ++i) {
            const double drift = std::abs(cur[i] - ref[i]);
            worst = std::max(worst, ref[i] != 0.0 ? drift / std::abs(ref[i]) : drift / 1e-2);
        }
    }
    return worst;
}
}  // namespace

TEST_CASE("flow right-hand sides") {
    SECTION("Landau fixed point: p_x + m w y = 0 and p_y = 0") {
        const ClassicalState s{.x = 3.0, .y = 2.0, .px = -2.0, .py = 0.0};
        const auto d = flow(GaugeId::landau, s, nat);
        CHECK(d.x == 0.0);
        CHECK(d.y == 0.0);
        CHECK(d.px == 0.0);
        CHECK(d.py == 0.0);
    }
    SECTION("Landau at (0,0,0,1)") {
        const auto d = flow(GaugeId::landau, {.x = 0, .y = 0, .px = 0, .py = 1}, nat);
        CHECK(d.x == 0.0);
        CHECK(d.y == 1.0);
        CHECK(d.px == 0.0);
        CHECK(d.py == 0.0);
    }
    SECTION("symmetric origin is stationary") {
        const auto d = flow(GaugeId::symmetric, {}, nat);
        CHECK(d.x == 0.0);
        CHECK(d.y == 0.0);
        CHECK(d.px == 0.0);
        CHECK(d.py == 0.0);
    }
}

TEST_CASE("invariants_eval") {
    SECTION("Landau at (0,0,0,1): (0, 1, 1/2)") {
        const auto inv = invariants_eval(GaugeId::landau, {.x = 0, .y = 0, .px = 0, .py = 1}, nat);
        CHECK(inv[0] == 0.0);
        CHECK(inv[1] == 1.0);
        CHECK(inv[2] == 0.5);
    }
    SECTION("symmetric at (1,0,0,0): (0, 1/2, 1/8)") {
        const auto inv =
            invariants_eval(GaugeId::symmetric, {.x = 1, .y = 0, .px = 0, .py = 0}, nat);
        CHECK(inv[0] == 0.0);
        CHECK(inv[1] == 0.5);
        CHECK(inv[2] == 0.125);
    }
    SECTION("energy equals m v^2 / 2 in both gauges") {
        const ClassicalState s{.x = 0.4, .y = -1.2, .px = 0.7, .py = 0.3};
        const PhysicalParams p{.m = 2.5, .q = 0.8, .B = 1.7, .c = 1.2};
        for (GaugeId g : {GaugeId::landau, GaugeId::symmetric}) {
            const auto [vx, vy] = velocity(g, s, p);
            const auto inv = invariants_eval(g, s, p);
            CHECK_THAT(inv[2],
                       Catch::Matchers::WithinRel(0.5 * p.m * (vx * vx + vy * vy), 1e-14));
        }
    }
}

TEST_CASE("rk4_integrate basics") {
    SECTION("trajectory includes s0 and has steps+1 entries") {
        const auto traj = rk4_integrate(GaugeId::landau, {.py = 1.0}, 0.01, 100, nat);
        REQUIRE(traj.size() == 101);
        CHECK(traj[0].py == 1.0);
        CHECK_THAT(traj.back().t, Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
    SECTION("single small step agrees with the flow to O(dt^2)") {
        const ClassicalState s0{.x = 0.3, .y = -0.2, .px = 0.5, .py = 0.9};
        const double dt = 1e-4;
        const auto traj = rk4_integrate(GaugeId::symmetric, s0, dt, 1, nat);
        const auto d = flow(GaugeId::symmetric, s0, nat);
        CHECK(std::abs(traj[1].x - (s0.x + dt * d.x)) <= dt * dt);
        CHECK(std::abs(traj[1].y - (s0.y + dt * d.y)) <= dt * dt);
        CHECK(std::abs(traj[1].px - (s0.px + dt * d.px)) <= dt * dt);
        CHECK(std::abs(traj[1].py - (s0.py + dt * d.py)) <= dt * dt);
    }
    SECTION("argument validation") {
        CHECK_THROWS_AS(rk4_integrate(GaugeId::landau, {}, 0.0, 10, nat), std::invalid_argument);
        CHECK_THROWS_AS(rk4_integrate(GaugeId::landau, {}, -0.1, 10, nat), std::invalid_argument);
        CHECK_THROWS_AS(rk4_integrate(GaugeId::landau, {}, 0.1, 0, nat), std::invalid_argument);
    }
}

TEST_CASE("one cyclotron period closes the orbit") {
    const auto s0 = state_from_velocity(GaugeId::landau, 0.0, 0.0, 0.0, 1.0, nat);
    const auto traj = rk4_integrate(GaugeId::landau, s0, kTwoPi / 1000.0, 1000, nat);
    const auto& end = traj.back();
    CHECK(std::abs(end.x - s0.x) <= 1e-8);
    CHECK(std::abs(end.y - s0.y) <= 1e-8);
    CHECK(std::abs(end.px - s0.px) <= 1e-8);
    CHECK(std::abs(end.py - s0.py) <= 1e-8);
}

TEST_CASE("return-to-start time is 2 pi / |omega_c|") {
    const PhysicalParams p{.m = 2.0, .q = 1.5, .B = 1.2, .c = 0.9};
    const double period = kTwoPi / std::abs(cyclotron_frequency(p));
    const auto s0 = state_from_velocity(GaugeId::symmetric, 1.0, 0.0, 0.0, 0.7, p);
    const double dt = period / 4096.0;
    const auto traj = rk4_integrate(GaugeId::symmetric, s0, dt, 5000, p);

    // locate the distance minimum away from t = 0 and refine it with a
    // parabola through the bracketing samples
    std::size_t best = 2048;
    double best_d2 = std::numeric_limits<double>::max();
    for (std::size_t i = 2048; i < traj.size(); ++i) {
        const double dx = traj[i].x - s0.x, dy = traj[i].y - s0.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    REQUIRE(best + 1 < traj.size());
    const auto d2at = [&](std::size_t i) {
        const double dx = traj[i].x - s0.x, dy = traj[i].y - s0.y;
        return dx * dx + dy * dy;
    };
    const double a = d2at(best - 1), b = d2at(best), c = d2at(best + 1);
    const double shift = 0.5 * (a - c) / (a - 2.0 * b + c);
    const double t_return = traj[best].t + shift * dt;
    CHECK_THAT(t_return, Catch::Matchers::WithinRel(period, 1e-6));
}

TEST_CASE("invariants drift below 1e-8 over ten periods") {
    for (GaugeId g : {GaugeId::landau, GaugeId::symmetric}) {
        const auto s0 = state_from_velocity(g, 0.3, -0.4, 0.8, 0.2, nat);
        const auto traj = rk4_integrate(g, s0, kTwoPi / 1000.0, 10000, nat);
        CHECK(max_invariant_drift(g, traj, nat) <= 1e-8);
    }
}

TEST_CASE("trajectory obeys the Lorentz-force form m x'' = m w y'") {
    const double dt = kTwoPi / 2000.0;
    const auto s0 = state_from_velocity(GaugeId::landau, 0.0, 0.0, 1.0, 0.5, nat);
    const auto traj = rk4_integrate(GaugeId::landau, s0, dt, 2000, nat);
    for (std::size_t i = 50; i < traj.size() - 1; i += 97) {
        const double ax = (traj[i + 1].x - 2.0 * traj[i].x + traj[i - 1].x) / (dt * dt);
        const double ay = (traj[i + 1].y - 2.0 * traj[i].y + traj[i - 1].y) / (dt * dt);
        const double vx = (traj[i + 1].x - traj[i - 1].x) / (2.0 * dt);
        const double vy = (traj[i + 1].y - traj[i - 1].y) / (2.0 * dt);
        CHECK(std::abs(ax - vy) <= 10.0 * dt * dt);
        CHECK(std::abs(ay + vx) <= 10.0 * dt * dt);
    }
}

TEST_CASE("orbit radius is v / omega_c") {
    SECTION("unit speed gives unit radius") {
        const auto s0 = state_from_velocity(GaugeId::landau, 0.0, 0.0, 0.0, 1.0, nat);
        const auto traj = rk4_integrate(GaugeId::landau, s0, kTwoPi / 1000.0, 1100, nat);
        CHECK_THAT(orbit_radius_estimate(traj), Catch::Matchers::WithinAbs(1.0, 1e-6));
    }
    SECTION("speed two gives radius two") {
        const auto s0 = state_from_velocity(GaugeId::symmetric, 0.5, -0.3, 2.0, 0.0, nat);
        const auto traj = rk4_integrate(GaugeId::symmetric, s0, kTwoPi / 1000.0, 1100, nat);
        CHECK_THAT(orbit_radius_estimate(traj), Catch::Matchers::WithinAbs(2.0, 1e-6));
    }
    SECTION("a fixed point has degenerate geometry") {
        const auto traj = rk4_integrate(GaugeId::landau, {.y = 1.0, .px = -1.0}, 0.01, 100, nat);
        CHECK_THROWS_AS(orbit_radius_estimate(traj), std::invalid_argument);
    }
    SECTION("too few points are rejected") {
        CHECK_THROWS_AS(orbit_radius_estimate({ClassicalState{}, ClassicalState{}}),
                        std::invalid_argument);
    }
}

TEST_CASE("matched velocities give gauge-independent trajectories") {
    const double vx = 0.6, vy = -0.8, x0 = 0.2, y0 = 1.1;
    const auto sl = state_from_velocity(GaugeId::landau, x0, y0, vx, vy, nat);
    const auto ss = state_from_velocity(GaugeId::symmetric, x0, y0, vx, vy, nat);
    const auto tl = rk4_integrate(GaugeId::landau, sl, kTwoPi / 1000.0, 2000, nat);
    const auto ts = rk4_integrate(GaugeId::symmetric, ss, kTwoPi / 1000.0, 2000, nat);
    double worst = 0.0;
    for (std::size_t i = 0; i < tl.size(); ++i) {
        worst = std::max(worst, std::abs(tl[i].x - ts[i].x));
        worst = std::max(worst, std::abs(tl[i].y - ts[i].y));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("trajectory CSV export") {
    const auto s0 = state_from_velocity(GaugeId::landau, 0.0, 0.0, 0.0, 1.0, nat);
    const auto traj = rk4_integrate(GaugeId::landau, s0, 0.1, 5, nat);
    std::stringstream ss;
    write_trajectory_csv(ss, GaugeId::landau, traj, nat);

    std::string line;
    std::getline(ss, line);
    CHECK(line == "t,x,y,px,py,c1,c2,H");
    std::size_t rows = 0;
    while (std::getline(ss, line)) {
        double t, x, y, px, py, c1, c2, h;
        REQUIRE(std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg,%lg,%lg,%lg,%lg", &t, &x, &y, &px, &py,
                            &c1, &c2, &h) == 8);
        ++rows;
    }
    CHECK(rows == traj.size());
}
