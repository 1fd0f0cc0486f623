#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "landau/symbolic.hpp"

using namespace landau;

namespace {

// |a - b| / max(1, |a|) over shared-exponent coefficient tables
double rel_coeff_diff(const GaussianPolynomial& a, const GaussianPolynomial& b) {
    REQUIRE(a.exponent() == b.exponent());
    const GaussianPolynomial d = gp_add(a, gp_scale(b, -1.0));
    return d.coeff_norm() / std::max(1.0, a.coeff_norm());
}

Complex rnd_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    return {static_cast<double>(d(rng)), static_cast<double>(d(rng))};
}

PolyDiffOperator random_op(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), pw(0, 2);
    PolyDiffOperator op;
    for (int t = 0, n = nterms(rng); t < n; ++t) {
        Complex c = rnd_complex(rng);
        if (c == Complex{}) c = 1.0;
        op.add(c, {static_cast<unsigned>(pw(rng)), static_cast<unsigned>(pw(rng)),
                   static_cast<unsigned>(pw(rng)), static_cast<unsigned>(pw(rng))});
    }
    return op;
}

GaussianPolynomial random_gp(std::mt19937& rng) {
    std::uniform_int_distribution<int> pw(0, 2), nterms(1, 3);
    std::uniform_real_distribution<double> re(-1.0, 1.0);
    QuadraticExponent q;
    q.axx = Complex(re(rng), re(rng));
    q.ayy = Complex(re(rng), re(rng));
    q.axy = Complex(re(rng), re(rng));
    q.bx = Complex(re(rng), re(rng));
    q.by = Complex(re(rng), re(rng));
    GaussianPolynomial::Poly poly;
    for (int t = 0, n = nterms(rng); t < n; ++t)
        poly[{static_cast<unsigned>(pw(rng)), static_cast<unsigned>(pw(rng))}] =
            Complex(re(rng), re(rng));
    if (poly.empty()) poly[{0, 0}] = 1.0;
    return {q, poly};
}

// H_L at natural units, assembled by hand so this file does not depend on
// the gauge module: (p_x + y)^2/2 + p_y^2/2.
PolyDiffOperator landau_hamiltonian_natural() {
    const auto px = PolyDiffOperator::momentum_x(1.0);
    const auto py = PolyDiffOperator::momentum_y(1.0);
    const auto kx = px + PolyDiffOperator::position_y();
    return Complex(0.5) * (op_compose(kx, kx) + op_compose(py, py));
}

// ground Landau state at lambda1 = 0: pi^{-1/4} exp(-y^2/2)
GaussianPolynomial ground_state() {
    QuadraticExponent q;
    q.ayy = -0.5;
    return {q, {{{0, 0}, 0.7511255444649425}}};
}

}  // namespace

TEST_CASE("op_apply: momentum on a plane wave picks out the eigenvalue") {
    QuadraticExponent q;
    q.bx = Complex(0.0, -1.0);  // exp(-i x), lambda1 = 1, hbar = 1
    const auto plane = GaussianPolynomial::exponential(q);
    const auto out = op_apply(PolyDiffOperator::momentum_x(1.0), plane);
    CHECK(out.exponent() == plane.exponent());
    CHECK(out.poly().size() == 1);
    CHECK(out.coeff(0, 0) == Complex(-1.0));
}

TEST_CASE("op_apply: derivative of a constant is the zero function") {
    const auto one = GaussianPolynomial::constant(1.0);
    const auto out = op_apply(PolyDiffOperator::d_x(), one);
    CHECK(out.is_zero());
}

TEST_CASE("op_apply: Euler operator on a monomial") {
    const auto x2 = GaussianPolynomial({}, {{{2, 0}, 1.0}});
    const auto euler = op_compose(PolyDiffOperator::position_x(), PolyDiffOperator::d_x());
    const auto out = op_apply(euler, x2);
    CHECK(out.coeff(2, 0) == Complex(2.0));
    CHECK(out.poly().size() == 1);
}

TEST_CASE("op_compose normal ordering") {
    const auto dx = PolyDiffOperator::d_x();
    const auto x = PolyDiffOperator::position_x();

    SECTION("dx after x rewrites to x dx + 1") {
        const auto lhs = op_compose(dx, x);
        const auto rhs = PolyDiffOperator::term(1.0, 1, 0, 1, 0) + PolyDiffOperator::identity();
        CHECK(lhs == rhs);
    }
    SECTION("p_x p_x = -dx^2 at hbar = 1") {
        const auto px = PolyDiffOperator::momentum_x(1.0);
        CHECK(op_compose(px, px) == PolyDiffOperator::term(-1.0, 0, 0, 2, 0));
    }
    SECTION("x after dx is already ordered") {
        CHECK(op_compose(x, dx) == PolyDiffOperator::term(1.0, 1, 0, 1, 0));
    }
}

TEST_CASE("canonical commutators") {
    const auto x = PolyDiffOperator::position_x();
    const auto px = PolyDiffOperator::momentum_x(1.0);
    const auto py = PolyDiffOperator::momentum_y(1.0);

    CHECK(op_commutator(x, px) == Complex(0.0, 1.0) * PolyDiffOperator::identity());
    CHECK(op_commutator(px, py).is_zero());

    // [p_x, p_y + m w x] = -i hbar m w at m w = 1
    const auto piy = py + PolyDiffOperator::position_x();
    CHECK(op_commutator(px, piy) == Complex(0.0, -1.0) * PolyDiffOperator::identity());

    CHECK(op_commutator(PolyDiffOperator::momentum_x(1.0), landau_hamiltonian_natural())
              .is_zero());
}

TEST_CASE("gp_translate") {
    SECTION("Gaussian recentering") {
        QuadraticExponent q;
        q.ayy = -0.5;
        const auto g = GaussianPolynomial::exponential(q);
        const auto t = gp_translate(g, 0.0, 1.0);
        CHECK(t.exponent().ayy == Complex(-0.5));
        CHECK(t.exponent().by == Complex(1.0));
        CHECK(t.exponent().g == Complex{});  // folded into the coefficient
        CHECK_THAT(t.coeff(0, 0).real(), Catch::Matchers::WithinRel(std::exp(-0.5), 1e-15));
    }
    SECTION("zero shift is the identity") {
        std::mt19937 rng(7);
        for (int i = 0; i < 20; ++i) {
            const auto psi = random_gp(rng);
            const auto t = gp_translate(psi, 0.0, 0.0);
            CHECK(t.exponent() == psi.exponent());
            CHECK(rel_coeff_diff(t, psi) == 0.0);
        }
    }
    SECTION("binomial shift of a bare monomial") {
        const auto x = GaussianPolynomial({}, {{{1, 0}, 1.0}});
        const auto t = gp_translate(x, 1.0, 0.0);
        CHECK(t.coeff(1, 0) == Complex(1.0));
        CHECK(t.coeff(0, 0) == Complex(-1.0));
        CHECK(t.poly().size() == 2);
    }
}

TEST_CASE("gp_mul_exp adds exponents componentwise") {
    QuadraticExponent q;
    q.axx = -1.0;
    const auto g = GaussianPolynomial::exponential(q);
    CHECK(gp_mul_exp(g, q).exponent().axx == Complex(-2.0));

    std::mt19937 rng(11);
    const auto psi = random_gp(rng);
    const auto same = gp_mul_exp(psi, {});
    CHECK(same.exponent() == psi.exponent());
    CHECK(rel_coeff_diff(same, psi) == 0.0);

    QuadraticExponent plus, minus;
    plus.bx = Complex(0.0, 1.0);
    minus.bx = Complex(0.0, -1.0);
    CHECK(gp_mul_exp(gp_mul_exp(psi, plus), minus).exponent() == psi.exponent());
}

TEST_CASE("gp_is_multiple") {
    std::mt19937 rng(23);
    const auto psi = random_gp(rng);

    SECTION("explicit scalar multiple") {
        const auto two_i = gp_scale(psi, Complex(0.0, 2.0));
        const auto c = gp_is_multiple(two_i, psi, 1e-12);
        REQUIRE(c.has_value());
        CHECK(std::abs(*c - Complex(0.0, 2.0)) <= 1e-12);
    }
    SECTION("different monomial support is not a multiple") {
        const auto x = GaussianPolynomial({}, {{{1, 0}, 1.0}});
        const auto y = GaussianPolynomial({}, {{{0, 1}, 1.0}});
        CHECK(!gp_is_multiple(x, y, 1e-9).has_value());
    }
    SECTION("different exponents are never multiples") {
        QuadraticExponent q;
        q.axx = -1.0;
        CHECK(!gp_is_multiple(gp_mul_exp(psi, q), psi, 1e-9).has_value());
    }
    SECTION("zero psi1 is 0 * psi2") {
        const auto zero = GaussianPolynomial{};
        const auto c = gp_is_multiple(zero, psi, 1e-12);
        REQUIRE(c.has_value());
        CHECK(*c == Complex{});
    }
    SECTION("rounding crumbs below tol * |psi2| count as the zero multiple") {
        const auto crumbs = gp_scale(psi, Complex(1e-15));
        const auto c = gp_is_multiple(crumbs, psi, 1e-12);
        REQUIRE(c.has_value());
        CHECK(*c == Complex{});
    }
    SECTION("zero psi2 is rejected") {
        CHECK_THROWS_AS(gp_is_multiple(psi, GaussianPolynomial{}, 1e-9), std::invalid_argument);
    }
}

TEST_CASE("gp_residual") {
    const auto h = landau_hamiltonian_natural();
    const auto phi0 = ground_state();

    CHECK(gp_residual(h, 0.5, phi0) <= 1e-12);
    CHECK(gp_residual(h, 0.7, phi0) >= 0.1);
    CHECK(gp_residual(PolyDiffOperator::identity(), 1.0, phi0) == 0.0);
    CHECK_THROWS_AS(gp_residual(h, 0.5, GaussianPolynomial{}), std::invalid_argument);
}

TEST_CASE("property: compose is the operator-product homomorphism") {
    std::mt19937 rng(101);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_op(rng);
        const auto b = random_op(rng);
        const auto psi = random_gp(rng);
        const auto lhs = op_apply(op_compose(a, b), psi);
        const auto rhs = op_apply(a, op_apply(b, psi));
        CHECK(rel_coeff_diff(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("property: Jacobi identity") {
    std::mt19937 rng(202);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_op(rng);
        const auto b = random_op(rng);
        const auto c = random_op(rng);
        const auto jac = op_commutator(op_commutator(a, b), c) +
                         op_commutator(op_commutator(b, c), a) +
                         op_commutator(op_commutator(c, a), b);
        const double scale = std::max({1.0, a.max_abs_coeff() * b.max_abs_coeff(),
                                       b.max_abs_coeff() * c.max_abs_coeff()});
        CHECK(jac.max_abs_coeff() <= 1e-12 * scale);
    }
}

TEST_CASE("property: op_apply is linear in the state and the operator") {
    std::mt19937 rng(303);
    for (int i = 0; i < 100; ++i) {
        const auto op = random_op(rng);
        const auto psi = random_gp(rng);
        const auto phi = gp_mul_monomial(psi, 1, 0);  // shares the exponent
        const Complex alpha = rnd_complex(rng), beta = rnd_complex(rng);

        const auto lhs = op_apply(op, gp_add(gp_scale(psi, alpha), gp_scale(phi, beta)));
        const auto rhs =
            gp_add(gp_scale(op_apply(op, psi), alpha), gp_scale(op_apply(op, phi), beta));
        CHECK(rel_coeff_diff(lhs, rhs) <= 1e-12);

        const auto op2 = random_op(rng);
        const auto l2 = op_apply(op + op2, psi);
        const auto r2 = gp_add(op_apply(op, psi), op_apply(op2, psi));
        CHECK(rel_coeff_diff(l2, r2) <= 1e-12);
    }
}

TEST_CASE("property: translation group law") {
    // integer shifts of a zero-exponent polynomial stay bitwise exact
    const auto p = GaussianPolynomial({}, {{{2, 1}, Complex(1.0, 1.0)}, {{0, 2}, 3.0}});
    const auto once = gp_translate(p, 3.0, -2.0);
    const auto twice = gp_translate(gp_translate(p, 1.0, -2.0), 2.0, 0.0);
    CHECK(once.poly() == twice.poly());
    CHECK(once.exponent() == twice.exponent());

    std::mt19937 rng(404);
    std::uniform_real_distribution<double> sh(-1.5, 1.5);
    for (int i = 0; i < 100; ++i) {
        const auto psi = random_gp(rng);
        const double a = sh(rng), b = sh(rng), c = sh(rng), d = sh(rng);
        const auto lhs = gp_translate(gp_translate(psi, a, b), c, d);
        const auto rhs = gp_translate(psi, a + c, b + d);
        const auto ratio = gp_is_multiple(lhs, rhs, 1e-10);
        REQUIRE(ratio.has_value());
        CHECK(std::abs(*ratio - Complex(1.0)) <= 1e-10);
    }
}

TEST_CASE("property: derivative commutes with transverse translation") {
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> sh(-1.5, 1.5);
    for (int i = 0; i < 100; ++i) {
        const auto psi = random_gp(rng);
        const double a = sh(rng);
        const auto lhs = op_apply(PolyDiffOperator::d_x(), gp_translate(psi, a, 0.0));
        const auto rhs = gp_translate(op_apply(PolyDiffOperator::d_x(), psi), a, 0.0);
        if (lhs.is_zero()) {
            CHECK(rhs.is_zero());
            continue;
        }
        const auto ratio = gp_is_multiple(lhs, rhs, 1e-10);
        REQUIRE(ratio.has_value());
        CHECK(std::abs(*ratio - Complex(1.0)) <= 1e-10);
    }
}

TEST_CASE("debug serialization is deterministic and sorted") {
    const auto op = op_compose(PolyDiffOperator::d_x(), PolyDiffOperator::position_x());
    CHECK(debug_string(op) ==
          "(1,0) * x^0 y^0 dx^0 dy^0\n"
          "(1,0) * x^1 y^0 dx^1 dy^0\n");

    QuadraticExponent q;
    q.ayy = -0.5;
    const auto psi = GaussianPolynomial(q, {{{0, 1}, Complex(0.0, 2.0)}, {{0, 0}, 1.0}});
    CHECK(debug_string(psi) ==
          "exp x^2=(0,0) y^2=(-0.5,0) xy=(0,0) x=(0,0) y=(0,0)\n"
          "x^0 y^0 = (1,0)\n"
          "x^0 y^1 = (0,2)\n");

    CHECK(debug_string(PolyDiffOperator{}) == "0\n");
}

TEST_CASE("stored coefficients are canonical: no zeros kept") {
    const auto p = GaussianPolynomial({}, {{{1, 0}, 1.0}, {{0, 1}, 0.0}});
    CHECK(p.poly().size() == 1);

    auto op = PolyDiffOperator::term(1.0, 0, 0, 1, 0);
    op.add(-1.0, {0, 0, 1, 0});
    CHECK(op.is_zero());
}

TEST_CASE("non-finite coefficients are rejected") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(GaussianPolynomial({}, {{{0, 0}, Complex(inf, 0.0)}}), std::invalid_argument);
    PolyDiffOperator op;
    CHECK_THROWS_AS(op.add(Complex(0.0, inf), {0, 0, 0, 0}), std::invalid_argument);
}
