#pragma once

// Exact calculus on the function class P(x,y) exp(Q(x,y)) with P a complex
// polynomial and Q a complex quadratic, together with polynomial-coefficient
// differential operators in normal form. The class is closed under
// differentiation, multiplication by x and y, translation and multiplication
// by exp(Q'), so applying any operator below is exact up to floating
// rounding; no series truncation happens anywhere.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace landau {

using Complex = std::complex<double>;

inline bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace detail {

inline double binomial(unsigned n, unsigned k) {
    double r = 1.0;
    for (unsigned i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

// n (n-1) ... (n-k+1)
inline double falling(unsigned n, unsigned k) {
    double r = 1.0;
    for (unsigned i = 0; i < k; ++i) r *= static_cast<double>(n - i);
    return r;
}

inline std::string fmt(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", z.real(), z.imag());
    return buf;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Quadratic exponent Q(x,y) = axx x^2 + ayy y^2 + axy xy + bx x + by y + g.
// The xy cross term is stored once; there is no split representation.
// ---------------------------------------------------------------------------
struct QuadraticExponent {
    Complex axx{}, ayy{}, axy{}, bx{}, by{}, g{};

    Complex eval(double x, double y) const {
        return axx * (x * x) + ayy * (y * y) + axy * (x * y) + bx * x + by * y + g;
    }

    /// Q(x - dx, y - dy) re-expanded in x, y.
    QuadraticExponent translated(double dx, double dy) const {
        QuadraticExponent r;
        r.axx = axx;
        r.ayy = ayy;
        r.axy = axy;
        r.bx = bx - 2.0 * axx * dx - axy * dy;
        r.by = by - 2.0 * ayy * dy - axy * dx;
        r.g = g + axx * (dx * dx) + ayy * (dy * dy) + axy * (dx * dy) - bx * dx - by * dy;
        return r;
    }

    QuadraticExponent operator+(const QuadraticExponent& o) const {
        return {axx + o.axx, ayy + o.ayy, axy + o.axy, bx + o.bx, by + o.by, g + o.g};
    }

    bool operator==(const QuadraticExponent&) const = default;
};

// ---------------------------------------------------------------------------
// GaussianPolynomial: canonical P(x,y) exp(Q(x,y)).
//
// Canonical form: the sparse table stores no zero coefficients, and the
// exponent constant g is always folded into the coefficients, so two equal
// functions in the class have identical exponents and tables.
// ---------------------------------------------------------------------------
class GaussianPolynomial {
public:
    using Key = std::array<unsigned, 2>;  // {x power, y power}
    using Poly = std::map<Key, Complex>;

    GaussianPolynomial() = default;

    GaussianPolynomial(QuadraticExponent q, Poly p) : exp_(q), poly_(std::move(p)) {
        canonicalize();
    }

    static GaussianPolynomial constant(Complex c) {
        return GaussianPolynomial({}, {{{0, 0}, c}});
    }

    /// exp(Q) with unit polynomial part.
    static GaussianPolynomial exponential(QuadraticExponent q) {
        return GaussianPolynomial(q, {{{0, 0}, Complex(1.0)}});
    }

    const QuadraticExponent& exponent() const { return exp_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.empty(); }

    Complex coeff(unsigned a, unsigned b) const {
        auto it = poly_.find({a, b});
        return it == poly_.end() ? Complex{} : it->second;
    }

    /// Euclidean norm over the polynomial coefficient table.
    double coeff_norm() const {
        double s = 0.0;
        for (const auto& [k, c] : poly_) s += std::norm(c);
        return std::sqrt(s);
    }

    Complex eval(double x, double y) const {
        Complex p{};
        for (const auto& [k, c] : poly_)
            p += c * std::pow(x, static_cast<int>(k[0])) * std::pow(y, static_cast<int>(k[1]));
        return p * std::exp(exp_.eval(x, y));
    }

private:
    void canonicalize() {
        if (exp_.g != Complex{}) {
            const Complex scale = std::exp(exp_.g);
            exp_.g = Complex{};
            for (auto& [k, c] : poly_) c *= scale;
        }
        for (auto it = poly_.begin(); it != poly_.end();) {
            if (!finite(it->second))
                throw std::invalid_argument("GaussianPolynomial: non-finite coefficient");
            if (it->second == Complex{})
                it = poly_.erase(it);
            else
                ++it;
        }
        if (!(finite(exp_.axx) && finite(exp_.ayy) && finite(exp_.axy) && finite(exp_.bx) &&
              finite(exp_.by)))
            throw std::invalid_argument("GaussianPolynomial: non-finite exponent");
    }

    QuadraticExponent exp_{};
    Poly poly_{};
};

inline GaussianPolynomial gp_scale(const GaussianPolynomial& psi, Complex c) {
    GaussianPolynomial::Poly out = psi.poly();
    for (auto& [k, v] : out) v *= c;
    return {psi.exponent(), std::move(out)};
}

/// Sum of two functions sharing one exponent (the only closed addition).
inline GaussianPolynomial gp_add(const GaussianPolynomial& a, const GaussianPolynomial& b) {
    if (!(a.exponent() == b.exponent()))
        throw std::invalid_argument("gp_add: exponents differ");
    GaussianPolynomial::Poly out = a.poly();
    for (const auto& [k, v] : b.poly()) out[k] += v;
    return {a.exponent(), std::move(out)};
}

inline GaussianPolynomial gp_mul_monomial(const GaussianPolynomial& psi, unsigned a, unsigned b) {
    GaussianPolynomial::Poly out;
    for (const auto& [k, v] : psi.poly()) out[{k[0] + a, k[1] + b}] = v;
    return {psi.exponent(), std::move(out)};
}

/// d/dx acting on P exp(Q): (P_x + P Q_x) exp(Q). Exponent unchanged.
inline GaussianPolynomial gp_dx(const GaussianPolynomial& psi) {
    const auto& q = psi.exponent();
    GaussianPolynomial::Poly out;
    for (const auto& [k, v] : psi.poly()) {
        if (k[0] > 0) out[{k[0] - 1, k[1]}] += static_cast<double>(k[0]) * v;
        if (q.axx != Complex{}) out[{k[0] + 1, k[1]}] += 2.0 * q.axx * v;
        if (q.axy != Complex{}) out[{k[0], k[1] + 1}] += q.axy * v;
        if (q.bx != Complex{}) out[k] += q.bx * v;
    }
    return {q, std::move(out)};
}

inline GaussianPolynomial gp_dy(const GaussianPolynomial& psi) {
    const auto& q = psi.exponent();
    GaussianPolynomial::Poly out;
    for (const auto& [k, v] : psi.poly()) {
        if (k[1] > 0) out[{k[0], k[1] - 1}] += static_cast<double>(k[1]) * v;
        if (q.ayy != Complex{}) out[{k[0], k[1] + 1}] += 2.0 * q.ayy * v;
        if (q.axy != Complex{}) out[{k[0] + 1, k[1]}] += q.axy * v;
        if (q.by != Complex{}) out[k] += q.by * v;
    }
    return {q, std::move(out)};
}

/// psi(x - dx, y - dy): binomial re-expansion of the table, exponent shifted
/// with the constant folded back into the coefficients.
inline GaussianPolynomial gp_translate(const GaussianPolynomial& psi, double dx, double dy) {
    GaussianPolynomial::Poly out;
    for (const auto& [k, v] : psi.poly()) {
        for (unsigned i = 0; i <= k[0]; ++i) {
            const double cx = detail::binomial(k[0], i) * std::pow(-dx, static_cast<int>(k[0] - i));
            if (cx == 0.0) continue;
            for (unsigned j = 0; j <= k[1]; ++j) {
                const double cy =
                    detail::binomial(k[1], j) * std::pow(-dy, static_cast<int>(k[1] - j));
                if (cy == 0.0) continue;
                out[{i, j}] += v * cx * cy;
            }
        }
    }
    return {psi.exponent().translated(dx, dy), std::move(out)};
}

/// Multiply by exp(q): exponents add componentwise, table unchanged.
inline GaussianPolynomial gp_mul_exp(const GaussianPolynomial& psi, const QuadraticExponent& q) {
    return {psi.exponent() + q, psi.poly()};
}

// ---------------------------------------------------------------------------
// PolyDiffOperator: finite sums of coeff * x^a y^b dx^p dy^q in normal form
// (multiplications before derivatives, terms merged and ordered
// lexicographically by (a, b, p, q), zero terms removed). Equality of
// operators is equality of normal forms.
// ---------------------------------------------------------------------------
class PolyDiffOperator {
public:
    using Key = std::array<unsigned, 4>;  // {xpow, ypow, dxpow, dypow}
    using Terms = std::map<Key, Complex>;

    PolyDiffOperator() = default;

    static PolyDiffOperator term(Complex c, unsigned xp, unsigned yp, unsigned dxp, unsigned dyp) {
        PolyDiffOperator op;
        op.add(c, {xp, yp, dxp, dyp});
        return op;
    }

    static PolyDiffOperator identity() { return term(1.0, 0, 0, 0, 0); }
    static PolyDiffOperator position_x() { return term(1.0, 1, 0, 0, 0); }
    static PolyDiffOperator position_y() { return term(1.0, 0, 1, 0, 0); }
    static PolyDiffOperator d_x() { return term(1.0, 0, 0, 1, 0); }
    static PolyDiffOperator d_y() { return term(1.0, 0, 0, 0, 1); }
    /// p_x = -i hbar d/dx.
    static PolyDiffOperator momentum_x(double hbar) { return term(Complex(0, -hbar), 0, 0, 1, 0); }
    static PolyDiffOperator momentum_y(double hbar) { return term(Complex(0, -hbar), 0, 0, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    unsigned max_dx_order() const {
        unsigned m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, k[2]);
        return m;
    }
    unsigned max_dy_order() const {
        unsigned m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, k[3]);
        return m;
    }

    PolyDiffOperator& add(Complex c, Key k) {
        if (!finite(c)) throw std::invalid_argument("PolyDiffOperator: non-finite coefficient");
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
        return *this;
    }

    friend PolyDiffOperator operator+(const PolyDiffOperator& a, const PolyDiffOperator& b) {
        PolyDiffOperator r = a;
        for (const auto& [k, c] : b.terms_) r.add(c, k);
        return r;
    }
    friend PolyDiffOperator operator-(const PolyDiffOperator& a, const PolyDiffOperator& b) {
        PolyDiffOperator r = a;
        for (const auto& [k, c] : b.terms_) r.add(-c, k);
        return r;
    }
    friend PolyDiffOperator operator*(Complex s, const PolyDiffOperator& a) {
        PolyDiffOperator r;
        if (s == Complex{}) return r;
        for (const auto& [k, c] : a.terms_) r.add(s * c, k);
        return r;
    }

    bool operator==(const PolyDiffOperator&) const = default;

private:
    Terms terms_;
};

/// Normal form of a after b, using dx^p x^a = sum_k C(p,k) a!/(a-k)! x^(a-k) dx^(p-k).
inline PolyDiffOperator op_compose(const PolyDiffOperator& a, const PolyDiffOperator& b) {
    PolyDiffOperator out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const unsigned p1 = ka[2], q1 = ka[3], a2 = kb[0], b2 = kb[1];
            for (unsigned k = 0; k <= std::min(p1, a2); ++k) {
                const double fx = detail::binomial(p1, k) * detail::falling(a2, k);
                for (unsigned l = 0; l <= std::min(q1, b2); ++l) {
                    const double fy = detail::binomial(q1, l) * detail::falling(b2, l);
                    out.add(ca * cb * (fx * fy),
                            {ka[0] + a2 - k, ka[1] + b2 - l, p1 - k + kb[2], q1 - l + kb[3]});
                }
            }
        }
    }
    return out;
}

inline PolyDiffOperator op_commutator(const PolyDiffOperator& a, const PolyDiffOperator& b) {
    return op_compose(a, b) - op_compose(b, a);
}

/// Exact application; the result keeps psi's exponent.
inline GaussianPolynomial op_apply(const PolyDiffOperator& op, const GaussianPolynomial& psi) {
    GaussianPolynomial acc(psi.exponent(), {});
    for (const auto& [k, c] : op.terms()) {
        GaussianPolynomial cur = psi;
        for (unsigned i = 0; i < k[2]; ++i) cur = gp_dx(cur);
        for (unsigned i = 0; i < k[3]; ++i) cur = gp_dy(cur);
        if (k[0] || k[1]) cur = gp_mul_monomial(cur, k[0], k[1]);
        acc = gp_add(acc, gp_scale(cur, c));
    }
    return acc;
}

/// Proportionality test: returns c with psi1 = c psi2 (coefficient residual
/// within tol * |psi1|, exponents componentwise within tol), else empty.
/// A zero psi1 is 0 * psi2 for any exponent.
inline std::optional<Complex> gp_is_multiple(const GaussianPolynomial& psi1,
                                             const GaussianPolynomial& psi2, double tol) {
    if (psi2.is_zero()) throw std::invalid_argument("gp_is_multiple: psi2 is zero");
    if (!(tol > 0.0)) throw std::invalid_argument("gp_is_multiple: tol must be > 0");
    // a psi1 at or below rounding scale relative to psi2 is the zero multiple;
    // normalizing its residual by |psi1| would make the test unsatisfiable
    if (psi1.is_zero() || psi1.coeff_norm() <= tol * psi2.coeff_norm()) return Complex{};

    const auto close = [tol](Complex u, Complex v) {
        return std::abs(u - v) <= tol * std::max({1.0, std::abs(u), std::abs(v)});
    };
    const auto &q1 = psi1.exponent(), &q2 = psi2.exponent();
    if (!(close(q1.axx, q2.axx) && close(q1.ayy, q2.ayy) && close(q1.axy, q2.axy) &&
          close(q1.bx, q2.bx) && close(q1.by, q2.by)))
        return std::nullopt;

    Complex num{};
    double den = 0.0;
    for (const auto& [k, c2] : psi2.poly()) {
        num += std::conj(c2) * psi1.coeff(k[0], k[1]);
        den += std::norm(c2);
    }
    const Complex c = num / den;

    double resid = 0.0;
    for (const auto& [k, c1] : psi1.poly()) resid += std::norm(c1 - c * psi2.coeff(k[0], k[1]));
    for (const auto& [k, c2] : psi2.poly())
        if (psi1.coeff(k[0], k[1]) == Complex{}) resid += std::norm(c * c2);
    if (std::sqrt(resid) <= tol * psi1.coeff_norm()) return c;
    return std::nullopt;
}

/// |(op - e) psi| / |psi| in the coefficient norm; zero iff psi is an exact
/// eigenfunction with eigenvalue e.
inline double gp_residual(const PolyDiffOperator& op, Complex e, const GaussianPolynomial& psi) {
    if (psi.is_zero()) throw std::invalid_argument("gp_residual: psi is zero");
    const GaussianPolynomial r = gp_add(op_apply(op, psi), gp_scale(psi, -e));
    return r.coeff_norm() / psi.coeff_norm();
}

// Deterministic, sorted, human-readable dumps (golden-file form).

inline std::string debug_string(const GaussianPolynomial& psi) {
    const auto& q = psi.exponent();
    std::string s = "exp x^2=" + detail::fmt(q.axx) + " y^2=" + detail::fmt(q.ayy) +
                    " xy=" + detail::fmt(q.axy) + " x=" + detail::fmt(q.bx) +
                    " y=" + detail::fmt(q.by) + "\n";
    if (psi.is_zero()) s += "0\n";
    for (const auto& [k, c] : psi.poly())
        s += "x^" + std::to_string(k[0]) + " y^" + std::to_string(k[1]) + " = " + detail::fmt(c) +
             "\n";
    return s;
}

inline std::string debug_string(const PolyDiffOperator& op) {
    if (op.is_zero()) return "0\n";
    std::string s;
    for (const auto& [k, c] : op.terms())
        s += detail::fmt(c) + " * x^" + std::to_string(k[0]) + " y^" + std::to_string(k[1]) +
             " dx^" + std::to_string(k[2]) + " dy^" + std::to_string(k[3]) + "\n";
    return s;
}

}  // namespace landau
