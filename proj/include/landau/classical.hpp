#pragma once

// Classical Hamiltonian flows for both gauges, fixed-step RK4, the three
// constants of motion, and cyclotron-orbit geometry.

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "landau/gauge.hpp"
#include "landau/params.hpp"

namespace landau {

struct ClassicalState {
    double x = 0.0, y = 0.0;    // position [cm]
    double px = 0.0, py = 0.0;  // canonical momentum [g cm/s]
    double t = 0.0;             // time [s]
};

/// Right-hand side of Hamilton's equations for the gauge (the t component
/// of the result is dt/dt = 1).
inline ClassicalState flow(GaugeId gauge, const ClassicalState& s, const PhysicalParams& p) {
    const double w = cyclotron_frequency(p);
    const double m = p.m;
    ClassicalState d;
    d.t = 1.0;
    if (gauge == GaugeId::landau) {
        d.x = (s.px + m * w * s.y) / m;
        d.px = 0.0;
        d.y = s.py / m;
        d.py = -w * (s.px + m * w * s.y);
    } else {
        const double kx = s.px + 0.5 * m * w * s.y;
        const double ky = s.py - 0.5 * m * w * s.x;
        d.x = kx / m;
        d.px = +0.5 * w * ky;
        d.y = ky / m;
        d.py = -0.5 * w * kx;
    }
    return d;
}

/// Kinetic velocity (dx/dt, dy/dt) at a state; gauge-independent physics,
/// gauge-dependent formula.
inline std::array<double, 2> velocity(GaugeId gauge, const ClassicalState& s,
                                      const PhysicalParams& p) {
    const ClassicalState d = flow(gauge, s, p);
    return {d.x, d.y};
}

/// Canonical momenta from a physical velocity via p = m v + (q/c) A(x, y);
/// use this to give both gauges the same physical initial condition.
inline ClassicalState state_from_velocity(GaugeId gauge, double x, double y, double vx, double vy,
                                          const PhysicalParams& p) {
    const double mw = p.m * cyclotron_frequency(p);
    ClassicalState s;
    s.x = x;
    s.y = y;
    if (gauge == GaugeId::landau) {
        s.px = p.m * vx - mw * y;
        s.py = p.m * vy;
    } else {
        s.px = p.m * vx - 0.5 * mw * y;
        s.py = p.m * vy + 0.5 * mw * x;
    }
    return s;
}

/// The three constants of motion evaluated at s:
/// Landau (p_x, p_y + m w x, H_L); symmetric (p_x - m w y/2, p_y + m w x/2, H_S).
inline std::array<double, 3> invariants_eval(GaugeId gauge, const ClassicalState& s,
                                             const PhysicalParams& p) {
    const double w = cyclotron_frequency(p);
    const double m = p.m;
    if (gauge == GaugeId::landau) {
        const double kx = s.px + m * w * s.y;
        return {s.px, s.py + m * w * s.x, (kx * kx + s.py * s.py) / (2.0 * m)};
    }
    const double kx = s.px + 0.5 * m * w * s.y;
    const double ky = s.py - 0.5 * m * w * s.x;
    return {s.px - 0.5 * m * w * s.y, s.py + 0.5 * m * w * s.x, (kx * kx + ky * ky) / (2.0 * m)};
}

/// Classical fixed-step RK4; the trajectory includes s0 and has steps+1
/// entries.
inline std::vector<ClassicalState> rk4_integrate(GaugeId gauge, const ClassicalState& s0,
                                                 double dt, std::size_t steps,
                                                 const PhysicalParams& p) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4_integrate: dt must be > 0");
    if (steps < 1) throw std::invalid_argument("rk4_integrate: steps must be >= 1");

    const auto axpy = [](const ClassicalState& s, double a, const ClassicalState& d) {
        return ClassicalState{s.x + a * d.x, s.y + a * d.y, s.px + a * d.px, s.py + a * d.py,
                              s.t + a * d.t};
    };

    std::vector<ClassicalState> traj;
    traj.reserve(steps + 1);
    traj.push_back(s0);
    ClassicalState s = s0;
    for (std::size_t i = 0; i < steps; ++i) {
        const ClassicalState k1 = flow(gauge, s, p);
        const ClassicalState k2 = flow(gauge, axpy(s, 0.5 * dt, k1), p);
        const ClassicalState k3 = flow(gauge, axpy(s, 0.5 * dt, k2), p);
        const ClassicalState k4 = flow(gauge, axpy(s, dt, k3), p);
        s = ClassicalState{s.x + dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
                           s.y + dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
                           s.px + dt / 6.0 * (k1.px + 2.0 * k2.px + 2.0 * k3.px + k4.px),
                           s.py + dt / 6.0 * (k1.py + 2.0 * k2.py + 2.0 * k3.py + k4.py),
                           s.t + dt};
        if (!(std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.px) &&
              std::isfinite(s.py)))
            throw std::runtime_error("rk4_integrate: state became non-finite");
        traj.push_back(s);
    }
    return traj;
}

/// Least-squares circle fit (algebraic / Kasa form) of the (x, y) points;
/// rejects degenerate geometry (collinear or coincident points).
inline double orbit_radius_estimate(const std::vector<ClassicalState>& traj) {
    if (traj.size() < 3) throw std::invalid_argument("orbit_radius_estimate: need >= 3 points");

    // normal equations for x^2 + y^2 + D x + E y + F = 0
    double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0;
    double rx = 0, ry = 0, rc = 0;
    const double n = static_cast<double>(traj.size());
    for (const auto& s : traj) {
        const double z = s.x * s.x + s.y * s.y;
        sxx += s.x * s.x;
        sxy += s.x * s.y;
        syy += s.y * s.y;
        sx += s.x;
        sy += s.y;
        rx -= z * s.x;
        ry -= z * s.y;
        rc -= z;
    }
    double a[3][4] = {{sxx, sxy, sx, rx}, {sxy, syy, sy, ry}, {sx, sy, n, rc}};

    double scale = 0.0;
    for (auto& row : a)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-12 * scale)
            throw std::invalid_argument("orbit_radius_estimate: degenerate geometry");
        std::swap(a[col], a[piv]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
        }
    }
    const double D = a[0][3] / a[0][0], E = a[1][3] / a[1][1], F = a[2][3] / a[2][2];
    const double r2 = 0.25 * (D * D + E * E) - F;
    if (!(r2 > 0.0)) throw std::invalid_argument("orbit_radius_estimate: degenerate geometry");
    return std::sqrt(r2);
}

/// CSV header "t,x,y,px,py,c1,c2,H", one row per trajectory point,
/// 17 significant digits.
inline void write_trajectory_csv(std::ostream& os, GaugeId gauge,
                                 const std::vector<ClassicalState>& traj,
                                 const PhysicalParams& p) {
    os << "t,x,y,px,py,c1,c2,H\n";
    char buf[320];
    for (const auto& s : traj) {
        const auto inv = invariants_eval(gauge, s, p);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t,
                      s.x, s.y, s.px, s.py, inv[0], inv[1], inv[2]);
        os << buf;
    }
}

}  // namespace landau
