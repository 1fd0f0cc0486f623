#pragma once

// Closed-form eigenfunctions of both gauge Hamiltonians, the degeneracy
// ladders built from the conserved operators, the resummation of a ladder
// into a displacement, flux-quantization phases, and stationary
// superpositions with exact time evolution.
//
// Family conventions (all satisfy H psi = E_n psi with E_n = hbar|w|(n+1/2),
// f_n the normalized oscillator function, s = sqrt(m|w|/hbar)):
//   Landau    first   e^{-i l x/hbar}            f_n(s(y - l/mw))   p_x eigenvalue -l
//   Landau    second  e^{i(l - mw x)y/hbar}      f_n(s(l/mw - x))   (p_y+mw x) eigenvalue +l
//   symmetric first   e^{i(l + mw y/2)x/hbar}    f_n(s(l/mw + y))   (p_x-mw y/2) eigenvalue +l
//   symmetric second  e^{i(l - mw x/2)y/hbar}    f_n(s(l/mw - x))   (p_y+mw x/2) eigenvalue +l
// The Landau-first oscillator center is y = +l/mw: that is what the paired
// eigenvalue problems force, and it makes the displacement identity
// eigenfunction(l) = U_l eigenfunction(0) coefficient-exact.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "landau/gauge.hpp"
#include "landau/params.hpp"
#include "landau/symbolic.hpp"

namespace landau {

struct FamilyId {
    GaugeId gauge;
    Branch branch;
    bool operator==(const FamilyId&) const = default;
};

inline constexpr FamilyId landau_first{GaugeId::landau, Branch::first};
inline constexpr FamilyId landau_second{GaugeId::landau, Branch::second};
inline constexpr FamilyId symmetric_first{GaugeId::symmetric, Branch::first};
inline constexpr FamilyId symmetric_second{GaugeId::symmetric, Branch::second};

inline constexpr unsigned kHermiteCap = 200;
inline constexpr unsigned kLadderCap = 64;

/// Physicists' Hermite polynomial H_n coefficients (index = power of z),
/// from H_{n+1} = 2z H_n - 2n H_{n-1}. Exact integers in floating form;
/// n above the cap is rejected to bound coefficient growth.
inline std::vector<double> hermite_coeffs(unsigned n, unsigned cap = kHermiteCap) {
    if (n > cap) throw std::invalid_argument("hermite_coeffs: n exceeds cap");
    std::vector<double> prev{1.0};
    if (n == 0) return prev;
    std::vector<double> cur{0.0, 2.0};
    for (unsigned m = 1; m < n; ++m) {
        std::vector<double> next(m + 2, 0.0);
        for (unsigned k = 0; k <= m; ++k) next[k + 1] += 2.0 * cur[k];
        for (unsigned k = 0; k < prev.size(); ++k) next[k] -= 2.0 * static_cast<double>(m) * prev[k];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Normalization (m|w|/pi hbar)^{1/4} / sqrt(2^n n!), via logs so large n
/// stays in range.
inline double oscillator_norm_factor(unsigned n, const PhysicalParams& p) {
    const double w = std::abs(cyclotron_frequency(p));
    return std::exp(0.25 * std::log(p.m * w / (M_PI * p.hbar)) -
                    0.5 * (n * std::log(2.0) + std::lgamma(static_cast<double>(n) + 1.0)));
}

namespace detail {

// Coefficients of sum_k c_k (alpha u + beta)^k as a polynomial in u.
inline std::vector<double> compose_linear(const std::vector<double>& c, double alpha,
                                          double beta) {
    std::vector<double> out(c.size(), 0.0);
    for (unsigned k = 0; k < c.size(); ++k) {
        if (c[k] == 0.0) continue;
        for (unsigned j = 0; j <= k; ++j)
            out[j] += c[k] * binomial(k, j) * std::pow(alpha, static_cast<int>(j)) *
                      std::pow(beta, static_cast<int>(k - j));
    }
    return out;
}

// f_n(alpha u + beta) as a GaussianPolynomial in the single variable u
// (u = x when x_axis, else y), fully expanded: Gaussian exponent plus
// Hermite polynomial table.
inline GaussianPolynomial oscillator_in_axis(unsigned n, double alpha, double beta, bool x_axis,
                                             const PhysicalParams& p) {
    const double norm = oscillator_norm_factor(n, p);
    std::vector<double> coeffs = hermite_coeffs(n);
    for (auto& c : coeffs) c *= norm;
    coeffs = compose_linear(coeffs, alpha, beta);

    QuadraticExponent q{};
    const Complex a2(-0.5 * alpha * alpha), ab(-alpha * beta), b2(-0.5 * beta * beta);
    if (x_axis) {
        q.axx = a2;
        q.bx = ab;
    } else {
        q.ayy = a2;
        q.by = ab;
    }
    q.g = b2;

    GaussianPolynomial::Poly poly;
    for (unsigned k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0.0) continue;
        if (x_axis)
            poly[{k, 0}] = coeffs[k];
        else
            poly[{0, k}] = coeffs[k];
    }
    return {q, std::move(poly)};
}

}  // namespace detail

/// Normalized 1-D oscillator f_n(s y) as a function on the plane (constant
/// in x); the n = 0, lam = 0 member of the Landau-first family.
inline GaussianPolynomial oscillator_1d(unsigned n, const PhysicalParams& p) {
    const double s = std::sqrt(p.m * std::abs(cyclotron_frequency(p)) / p.hbar);
    return detail::oscillator_in_axis(n, s, 0.0, /*x_axis=*/false, p);
}

/// Closed-form level-n eigenfunction of the family, parameterized by the
/// eigenvalue lam of its defining conserved operator. Requires omega_c != 0.
inline GaussianPolynomial eigenfunction(FamilyId fam, unsigned n, double lam,
                                        const PhysicalParams& p) {
    const double w = cyclotron_frequency(p);
    if (w == 0.0) throw std::invalid_argument("eigenfunction: requires omega_c != 0");
    const double mw = p.m * w;
    const double s = std::sqrt(p.m * std::abs(w) / p.hbar);
    const double center = lam / mw;

    GaussianPolynomial osc;
    QuadraticExponent phase{};
    if (fam == landau_first) {
        osc = detail::oscillator_in_axis(n, s, -s * center, false, p);
        phase.bx = Complex(0.0, -lam / p.hbar);
    } else if (fam == landau_second) {
        osc = detail::oscillator_in_axis(n, -s, s * center, true, p);
        phase.by = Complex(0.0, lam / p.hbar);
        phase.axy = Complex(0.0, -mw / p.hbar);
    } else if (fam == symmetric_first) {
        osc = detail::oscillator_in_axis(n, s, s * center, false, p);
        phase.bx = Complex(0.0, lam / p.hbar);
        phase.axy = Complex(0.0, mw / (2.0 * p.hbar));
    } else {
        osc = detail::oscillator_in_axis(n, -s, s * center, true, p);
        phase.by = Complex(0.0, lam / p.hbar);
        phase.axy = Complex(0.0, -mw / (2.0 * p.hbar));
    }
    return gp_mul_exp(osc, phase);
}

/// The conserved operator whose eigenvalue parameterizes the family.
inline PolyDiffOperator defining_invariant(FamilyId fam, const PhysicalParams& p) {
    auto [first, second] = invariant_pair(fam.gauge, p);
    return fam.branch == Branch::first ? first : second;
}

/// Eigenvalue of defining_invariant on eigenfunction(fam, n, lam):
/// -lam for Landau first, +lam for the other three.
inline double invariant_eigenvalue(FamilyId fam, double lam) {
    return (fam == landau_first) ? -lam : lam;
}

/// The other conserved operator: it commutes with H but not with the
/// defining invariant, so it walks through the level's degenerate subspace
/// and generates the family's displacement operator.
inline PolyDiffOperator partner_invariant(FamilyId fam, const PhysicalParams& p) {
    auto [first, second] = invariant_pair(fam.gauge, p);
    return fam.branch == Branch::first ? second : first;
}

/// j-fold application of the partner invariant to eigenfunction(fam,n,lam):
/// the degeneracy ladder f_n^j / g_n^j. Still an E_n eigenfunction.
inline GaussianPolynomial ladder_state(FamilyId fam, unsigned n, unsigned j, double lam,
                                       const PhysicalParams& p, unsigned cap = kLadderCap) {
    if (j > cap) throw std::invalid_argument("ladder_state: j exceeds cap");
    const PolyDiffOperator pi = partner_invariant(fam, p);
    GaussianPolynomial psi = eigenfunction(fam, n, lam, p);
    for (unsigned i = 0; i < j; ++i) psi = op_apply(pi, psi);
    return psi;
}

/// Partial sum sum_{j<=j_max} (1/j!) (lam/(i hbar m w))^j ladder_state(j, 0):
/// the Taylor truncation of the displacement exponential applied to the
/// lam = 0 eigenfunction. Converges to
/// apply_displacement(displacement(..., lam), eigenfunction(fam, n, 0))
/// in L2 on bounded boxes as j_max grows.
inline GaussianPolynomial resum_displaced(FamilyId fam, unsigned n, double lam, unsigned j_max,
                                          const PhysicalParams& p, unsigned cap = kLadderCap) {
    if (j_max > cap) throw std::invalid_argument("resum_displaced: j_max exceeds cap");
    const double w = cyclotron_frequency(p);
    if (w == 0.0) throw std::invalid_argument("resum_displaced: requires omega_c != 0");
    const Complex step = Complex(lam) / (Complex(0.0, p.hbar) * Complex(p.m * w));

    const PolyDiffOperator pi = partner_invariant(fam, p);
    GaussianPolynomial state = eigenfunction(fam, n, 0.0, p);
    GaussianPolynomial acc = state;
    Complex coeff(1.0);
    for (unsigned j = 1; j <= j_max; ++j) {
        state = op_apply(pi, state);
        coeff *= step / static_cast<double>(j);
        acc = gp_add(acc, gp_scale(state, coeff));
    }
    return acc;
}

/// The invariance phase exp(i lam1 lam2 / (m w hbar)) of the displacement
/// pair; trivial exactly at quantized flux lam1 lam2 = 2 pi k m w hbar.
inline Complex flux_phase(double lam1, double lam2, const PhysicalParams& p) {
    const double w = cyclotron_frequency(p);
    if (w == 0.0) throw std::invalid_argument("flux_phase: requires omega_c != 0");
    return std::exp(Complex(0.0, lam1 * lam2 / (p.m * w * p.hbar)));
}

/// Nearest integer k with |lam1 lam2 / (2 pi m w hbar) - k| <= tol, if any.
/// With lam = m w l this is the quantized-area condition (m w/hbar) l1 l2 = 2 pi k.
inline std::optional<long> is_flux_quantized(double lam1, double lam2, const PhysicalParams& p,
                                             double tol) {
    const double w = cyclotron_frequency(p);
    if (w == 0.0) throw std::invalid_argument("is_flux_quantized: requires omega_c != 0");
    if (!(tol > 0.0 && tol < 0.5)) throw std::invalid_argument("is_flux_quantized: tol in (0,0.5)");
    const double ratio = lam1 * lam2 / (2.0 * M_PI * p.m * w * p.hbar);
    const double k = std::round(ratio);
    if (std::abs(ratio - k) <= tol) return static_cast<long>(k);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stationary superpositions. Construction checks each member really is an
// E_n eigenstate of the configured gauge Hamiltonian; a zero member or a
// wrong level would otherwise make time_evolve silently wrong.
// ---------------------------------------------------------------------------
struct SuperpositionTerm {
    Complex amplitude;
    unsigned n;
    GaussianPolynomial state;
};

class Superposition {
public:
    static constexpr double kStateResidualBound = 1e-10;

    Superposition(GaugeId gauge, const PhysicalParams& p, std::vector<SuperpositionTerm> terms)
        : gauge_(gauge), terms_(std::move(terms)) {
        const PolyDiffOperator h = hamiltonian(gauge_, p);
        for (const auto& t : terms_) {
            if (t.state.is_zero())
                throw std::invalid_argument("Superposition: zero member state");
            if (gp_residual(h, landau_level(t.n, p), t.state) > kStateResidualBound)
                throw std::invalid_argument("Superposition: member is not an E_n eigenstate");
        }
    }

    GaugeId gauge() const { return gauge_; }
    const std::vector<SuperpositionTerm>& terms() const { return terms_; }

private:
    GaugeId gauge_;
    std::vector<SuperpositionTerm> terms_;
};

/// Multiplies each amplitude by exp(-i E_n t / hbar); states unchanged.
inline Superposition time_evolve(const Superposition& s, double t, const PhysicalParams& p) {
    std::vector<SuperpositionTerm> out = s.terms();
    for (auto& term : out)
        term.amplitude *= std::exp(Complex(0.0, -landau_level(term.n, p) * t / p.hbar));
    return {s.gauge(), p, std::move(out)};
}

}  // namespace landau
