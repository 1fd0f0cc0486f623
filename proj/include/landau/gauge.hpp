#pragma once

// Gauge-specific operator constructors: Hamiltonians, the two conserved
// momenta of each gauge, the displacement (magnetic translation) operators
// generated by them, and the Landau -> symmetric gauge transformation.

#include <stdexcept>
#include <utility>

#include "landau/params.hpp"
#include "landau/symbolic.hpp"

namespace landau {

/// A_L = B(-y, 0, 0) or A_S = (B/2)(-y, x, 0); same field B z-hat.
enum class GaugeId { landau, symmetric };

/// Selects one of the two one-parameter families / unitary operators of a
/// gauge (U_lambda1 vs U_lambda2, U_gamma1 vs U_gamma2).
enum class Branch { first, second };

/// H_L = (p_x + m w y)^2/2m + p_y^2/2m,
/// H_S = (p_x + m w y/2)^2/2m + (p_y - m w x/2)^2/2m, normal form.
inline PolyDiffOperator hamiltonian(GaugeId gauge, const PhysicalParams& p) {
    const double w = cyclotron_frequency(p);
    const double mw = p.m * w;
    const auto px = PolyDiffOperator::momentum_x(p.hbar);
    const auto py = PolyDiffOperator::momentum_y(p.hbar);
    const auto x = PolyDiffOperator::position_x();
    const auto y = PolyDiffOperator::position_y();

    PolyDiffOperator kx, ky;
    if (gauge == GaugeId::landau) {
        kx = px + Complex(mw) * y;
        ky = py;
    } else {
        kx = px + Complex(0.5 * mw) * y;
        ky = py - Complex(0.5 * mw) * x;
    }
    return Complex(0.5 / p.m) * (op_compose(kx, kx) + op_compose(ky, ky));
}

/// The two operators commuting with the gauge's Hamiltonian:
/// Landau (p_x, p_y + m w x); symmetric (p_x - m w y/2, p_y + m w x/2).
inline std::pair<PolyDiffOperator, PolyDiffOperator> invariant_pair(GaugeId gauge,
                                                                    const PhysicalParams& p) {
    const double mw = p.m * cyclotron_frequency(p);
    const auto px = PolyDiffOperator::momentum_x(p.hbar);
    const auto py = PolyDiffOperator::momentum_y(p.hbar);
    const auto x = PolyDiffOperator::position_x();
    const auto y = PolyDiffOperator::position_y();
    if (gauge == GaugeId::landau) return {px, py + Complex(mw) * x};
    return {px - Complex(0.5 * mw) * y, py + Complex(0.5 * mw) * x};
}

// ---------------------------------------------------------------------------
// DisplacementOp: a planar translation together with a linear pure-phase
// factor. This is the exact closed form of exp(-i (lam / hbar m w) G) for
// each conserved generator G: the translation and multiplication parts of
// every G commute, so the exponential splits with no series truncation.
// ---------------------------------------------------------------------------
class DisplacementOp {
public:
    DisplacementOp() = default;

    DisplacementOp(double dx, double dy, QuadraticExponent phase)
        : dx_(dx), dy_(dy), phase_(phase) {
        if (phase.axx != Complex{} || phase.ayy != Complex{} || phase.axy != Complex{} ||
            phase.bx.real() != 0.0 || phase.by.real() != 0.0 || phase.g.real() != 0.0)
            throw std::invalid_argument("DisplacementOp: phase must be purely linear imaginary");
    }

    double dx() const { return dx_; }
    double dy() const { return dy_; }
    const QuadraticExponent& phase() const { return phase_; }

private:
    double dx_ = 0.0, dy_ = 0.0;
    QuadraticExponent phase_{};
};

/// Exact exponential of the conserved generators:
///   Landau    first   U_l1 = exp(-i(l/hbar m w)(p_y + m w x)),
///   Landau    second  U_l2 = exp(-i(l/hbar m w) p_x),
///   symmetric first   U_g1 = exp(-i(l/hbar m w)(p_x - m w y/2)),
///   symmetric second  U_g2 = exp(-i(l/hbar m w)(p_y + m w x/2)).
/// The momentum half translates by +l/(m w) along its axis; the position
/// half is the linear phase. Requires w != 0.
inline DisplacementOp displacement(GaugeId gauge, Branch which, double lam,
                                   const PhysicalParams& p) {
    const double w = cyclotron_frequency(p);
    if (w == 0.0) throw std::invalid_argument("displacement: requires omega_c != 0");
    const double shift = lam / (p.m * w);

    QuadraticExponent phase{};
    if (gauge == GaugeId::landau) {
        if (which == Branch::first) {
            phase.bx = Complex(0.0, -lam / p.hbar);
            return {0.0, shift, phase};
        }
        return {shift, 0.0, phase};
    }
    if (which == Branch::first) {
        phase.by = Complex(0.0, +lam / (2.0 * p.hbar));
        return {shift, 0.0, phase};
    }
    phase.bx = Complex(0.0, -lam / (2.0 * p.hbar));
    return {0.0, shift, phase};
}

inline GaussianPolynomial apply_displacement(const DisplacementOp& d,
                                             const GaussianPolynomial& psi) {
    return gp_mul_exp(gp_translate(psi, d.dx(), d.dy()), d.phase());
}

/// psi_S = exp(+i m w x y / 2 hbar) psi_L, the standard transform for
/// A_S = A_L + grad(B x y / 2).
inline GaussianPolynomial gauge_transform_L_to_S(const GaussianPolynomial& psi,
                                                 const PhysicalParams& p) {
    QuadraticExponent q{};
    q.axy = Complex(0.0, p.m * cyclotron_frequency(p) / (2.0 * p.hbar));
    return gp_mul_exp(psi, q);
}

}  // namespace landau
