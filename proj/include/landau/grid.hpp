#pragma once

// Independent numerical oracle: sampled fields on a rectangular grid,
// second-order central differences for operator application, trapezoidal
// inner products, and a convergence-order estimator. Nothing here reuses
// the symbolic application path, so symbolic results can be cross-checked
// against a method with a known O(h^2) error model.

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau/params.hpp"
#include "landau/symbolic.hpp"

namespace landau {

struct Grid2D {
    double x_min, x_max, y_min, y_max;
    std::size_t nx, ny;

    Grid2D(double x0, double x1, double y0, double y1, std::size_t nx_, std::size_t ny_)
        : x_min(x0), x_max(x1), y_min(y0), y_max(y1), nx(nx_), ny(ny_) {
        if (!(x_max > x_min) || !(y_max > y_min))
            throw std::invalid_argument("Grid2D: box must have positive extent");
        if (nx < 8 || ny < 8) throw std::invalid_argument("Grid2D: need at least 8 nodes per axis");
    }

    double hx() const { return (x_max - x_min) / static_cast<double>(nx - 1); }
    double hy() const { return (y_max - y_min) / static_cast<double>(ny - 1); }
    double x(std::size_t i) const { return x_min + static_cast<double>(i) * hx(); }
    double y(std::size_t j) const { return y_min + static_cast<double>(j) * hy(); }

    bool operator==(const Grid2D&) const = default;
};

/// Square box [-half,half]^2 with 8 max(l_B, l_B + |lam|/m w) half-width:
/// large enough that Gaussian tails of the displaced n <= 10 states are
/// below 1e-14 at the boundary.
inline Grid2D make_verification_grid(double lam, const PhysicalParams& p, std::size_t nodes = 256) {
    const double lb = magnetic_length(p);
    const double off = std::abs(lam) / (p.m * std::abs(cyclotron_frequency(p)));
    const double half = 8.0 * std::max(lb, lb + off);
    return {-half, half, -half, half, nodes, nodes};
}

/// Complex field sampled at the nodes, row-major with x fastest
/// (index = iy*nx + ix). `margin` marks how many boundary rings are invalid;
/// finite-difference application widens it by one.
class GridField {
public:
    GridField(Grid2D g, std::vector<Complex> v, int margin = 0)
        : grid_(g), values_(std::move(v)), margin_(margin) {
        if (values_.size() != grid_.nx * grid_.ny)
            throw std::invalid_argument("GridField: value count does not match grid");
        for (const Complex& z : values_)
            if (!finite(z)) throw std::invalid_argument("GridField: non-finite value");
    }

    const Grid2D& grid() const { return grid_; }
    const std::vector<Complex>& values() const { return values_; }
    int margin() const { return margin_; }

    Complex at(std::size_t ix, std::size_t iy) const { return values_[iy * grid_.nx + ix]; }

private:
    Grid2D grid_;
    std::vector<Complex> values_;
    int margin_;
};

/// Pointwise evaluation of P exp(Q) at the nodes. Rejects boxes on which
/// Re Q leaves the double exponent range upward (exp would be infinite);
/// deep negative Re Q underflows to zero, which is the correct tail value.
/// Monomial powers come from per-axis tables so high-degree states (ladder
/// partial sums) stay cheap to sample.
inline GridField sample(const GaussianPolynomial& psi, const Grid2D& g) {
    unsigned max_a = 0, max_b = 0;
    struct Term {
        unsigned a, b;
        Complex c;
    };
    std::vector<Term> terms;
    terms.reserve(psi.poly().size());
    for (const auto& [k, c] : psi.poly()) {
        terms.push_back({k[0], k[1], c});
        max_a = std::max(max_a, k[0]);
        max_b = std::max(max_b, k[1]);
    }

    std::vector<double> xpow((max_a + 1) * g.nx), ypow((max_b + 1) * g.ny);
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
        xpow[ix * (max_a + 1)] = 1.0;
        for (unsigned a = 1; a <= max_a; ++a)
            xpow[ix * (max_a + 1) + a] = xpow[ix * (max_a + 1) + a - 1] * g.x(ix);
    }
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
        ypow[iy * (max_b + 1)] = 1.0;
        for (unsigned b = 1; b <= max_b; ++b)
            ypow[iy * (max_b + 1) + b] = ypow[iy * (max_b + 1) + b - 1] * g.y(iy);
    }

    std::vector<Complex> v(g.nx * g.ny);
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
        const double y = g.y(iy);
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            const double x = g.x(ix);
            const Complex q = psi.exponent().eval(x, y);
            if (q.real() > 708.0)
                throw std::overflow_error("sample: Re Q exceeds double exponent range");
            Complex p{};
            for (const Term& t : terms)
                p += t.c * (xpow[ix * (max_a + 1) + t.a] * ypow[iy * (max_b + 1) + t.b]);
            v[iy * g.nx + ix] = p * std::exp(q);
        }
    }
    return {g, std::move(v), 0};
}

namespace detail {

// Central stencil along one axis (order 0, 1 or 2); rim left at zero.
inline void stencil_axis(const Grid2D& g, const std::vector<Complex>& in,
                         std::vector<Complex>& out, unsigned order, bool x_axis) {
    const std::size_t nx = g.nx, ny = g.ny;
    const double h = x_axis ? g.hx() : g.hy();
    out.assign(in.size(), Complex{});
    if (order == 0) {
        out = in;
        return;
    }
    const std::size_t stride = x_axis ? 1 : nx;
    for (std::size_t iy = x_axis ? 0 : 1; iy < (x_axis ? ny : ny - 1); ++iy) {
        for (std::size_t ix = x_axis ? 1 : 0; ix < (x_axis ? nx - 1 : nx); ++ix) {
            const std::size_t k = iy * nx + ix;
            if (order == 1)
                out[k] = (in[k + stride] - in[k - stride]) / (2.0 * h);
            else
                out[k] = (in[k + stride] - 2.0 * in[k] + in[k - stride]) / (h * h);
        }
    }
}

}  // namespace detail

/// Applies the operator with second-order central stencils (multiplication
/// terms exact). Derivative order above 2 per axis is rejected; the result's
/// invalid boundary ring grows by one node when any derivative is present.
inline GridField fd_apply(const PolyDiffOperator& op, const GridField& f) {
    if (op.max_dx_order() > 2 || op.max_dy_order() > 2)
        throw std::invalid_argument("fd_apply: derivative order above 2 per axis");
    const Grid2D& g = f.grid();
    const bool has_deriv = op.max_dx_order() > 0 || op.max_dy_order() > 0;

    std::vector<Complex> acc(f.values().size(), Complex{});
    std::vector<Complex> tx, ty;
    for (const auto& [k, c] : op.terms()) {
        detail::stencil_axis(g, f.values(), tx, k[2], true);
        detail::stencil_axis(g, tx, ty, k[3], false);
        for (std::size_t iy = 0; iy < g.ny; ++iy) {
            const double y = g.y(iy);
            for (std::size_t ix = 0; ix < g.nx; ++ix) {
                const double xw = std::pow(g.x(ix), static_cast<int>(k[0])) *
                                  std::pow(y, static_cast<int>(k[1]));
                acc[iy * g.nx + ix] += c * xw * ty[iy * g.nx + ix];
            }
        }
    }

    const int margin = f.margin() + (has_deriv ? 1 : 0);
    // rim values are stencil garbage; zero them so they cannot leak
    for (std::size_t iy = 0; iy < g.ny; ++iy)
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            const bool interior = ix >= static_cast<std::size_t>(margin) &&
                                  ix + static_cast<std::size_t>(margin) < g.nx &&
                                  iy >= static_cast<std::size_t>(margin) &&
                                  iy + static_cast<std::size_t>(margin) < g.ny;
            if (!interior) acc[iy * g.nx + ix] = Complex{};
        }
    return {g, std::move(acc), margin};
}

/// |fd_apply(op, sample psi) - e sample psi|_2 / |sample psi|_2 over the
/// valid interior nodes.
inline double residual_norm(const PolyDiffOperator& op, Complex e, const GaussianPolynomial& psi,
                            const Grid2D& g) {
    const GridField fs = sample(psi, g);
    const GridField hf = fd_apply(op, fs);
    const std::size_t m = static_cast<std::size_t>(hf.margin());
    double num = 0.0, den = 0.0;
    for (std::size_t iy = m; iy + m < g.ny; ++iy)
        for (std::size_t ix = m; ix + m < g.nx; ++ix) {
            const Complex v = fs.at(ix, iy);
            num += std::norm(hf.at(ix, iy) - e * v);
            den += std::norm(v);
        }
    if (den == 0.0) throw std::invalid_argument("residual_norm: zero field");
    return std::sqrt(num / den);
}

/// Trapezoid-weighted <f,g> = sum w_ij conj(f_ij) g_ij over the common valid
/// sub-box; fixed row-major summation order.
inline Complex l2_inner(const GridField& f, const GridField& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("l2_inner: grid mismatch");
    const Grid2D& gr = f.grid();
    const std::size_t m = static_cast<std::size_t>(std::max(f.margin(), g.margin()));
    const std::size_t ix0 = m, ix1 = gr.nx - 1 - m, iy0 = m, iy1 = gr.ny - 1 - m;
    Complex s{};
    for (std::size_t iy = iy0; iy <= iy1; ++iy) {
        const double wy = (iy == iy0 || iy == iy1) ? 0.5 : 1.0;
        for (std::size_t ix = ix0; ix <= ix1; ++ix) {
            const double wx = (ix == ix0 || ix == ix1) ? 0.5 : 1.0;
            s += wx * wy * std::conj(f.at(ix, iy)) * g.at(ix, iy);
        }
    }
    return s * (gr.hx() * gr.hy());
}

inline double l2_norm(const GridField& f) { return std::sqrt(std::abs(l2_inner(f, f).real())); }

/// L2 distance of two symbolic states measured on the grid.
inline double l2_distance(const GaussianPolynomial& a, const GaussianPolynomial& b,
                          const Grid2D& g) {
    const GridField fa = sample(a, g), fb = sample(b, g);
    std::vector<Complex> d(fa.values().size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = fa.values()[i] - fb.values()[i];
    return l2_norm(GridField{g, std::move(d), 0});
}

struct ConvergenceReport {
    double order = 0.0;
    /// Set when the residuals sit at the rounding floor (stencil exact for
    /// the state), where the fitted slope is meaningless.
    bool floor_limited = false;
};

/// Least-squares slope of log(residual) vs log(h) over nested grids on a
/// common box; about 2 for smooth states.
inline ConvergenceReport convergence_order(const PolyDiffOperator& op, Complex e,
                                           const GaussianPolynomial& psi,
                                           const std::vector<Grid2D>& grids) {
    if (grids.size() < 3) throw std::invalid_argument("convergence_order: need >= 3 grids");
    for (const auto& g : grids)
        if (g.x_min != grids[0].x_min || g.x_max != grids[0].x_max || g.y_min != grids[0].y_min ||
            g.y_max != grids[0].y_max)
            throw std::invalid_argument("convergence_order: grids must share one box");

    std::vector<double> lh, lr;
    bool floor = false;
    for (const auto& g : grids) {
        const double r = residual_norm(op, e, psi, g);
        if (r < 1e-12) floor = true;
        lh.push_back(std::log(std::max(g.hx(), g.hy())));
        lr.push_back(std::log(std::max(r, 1e-300)));
    }
    double mh = 0.0, mr = 0.0;
    for (std::size_t i = 0; i < lh.size(); ++i) {
        mh += lh[i];
        mr += lr[i];
    }
    mh /= static_cast<double>(lh.size());
    mr /= static_cast<double>(lr.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lh.size(); ++i) {
        sxy += (lh[i] - mh) * (lr[i] - mr);
        sxx += (lh[i] - mh) * (lh[i] - mh);
    }
    return {sxy / sxx, floor};
}

// --- CSV interface: header "x,y,re,im", row-major, 17 significant digits ---

inline void write_field_csv(std::ostream& os, const GridField& f) {
    const Grid2D& g = f.grid();
    os << "x,y,re,im\n";
    char buf[160];
    for (std::size_t iy = 0; iy < g.ny; ++iy)
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            const Complex v = f.at(ix, iy);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", g.x(ix), g.y(iy), v.real(),
                          v.imag());
            os << buf;
        }
}

inline GridField read_field_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "x,y,re,im")
        throw std::invalid_argument("read_field_csv: bad header");
    std::vector<double> xs, ys;
    std::vector<Complex> vals;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        double x, y, re, im;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg", &x, &y, &re, &im) != 4)
            throw std::invalid_argument("read_field_csv: bad row");
        xs.push_back(x);
        ys.push_back(y);
        vals.emplace_back(re, im);
    }
    if (vals.empty()) throw std::invalid_argument("read_field_csv: no data");
    std::size_t nx = 1;
    while (nx < ys.size() && ys[nx] == ys[0]) ++nx;
    if (vals.size() % nx != 0) throw std::invalid_argument("read_field_csv: ragged rows");
    const std::size_t ny = vals.size() / nx;
    Grid2D g{xs[0], xs[nx - 1], ys[0], ys.back(), nx, ny};
    return {g, std::move(vals), 0};
}

}  // namespace landau
