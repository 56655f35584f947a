#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chazylab/chazy_ode.hpp"
#include "chazylab/duality.hpp"
#include "chazylab/quartic.hpp"

using namespace chazylab;

namespace {

std::mt19937 rng(4242);

cx random_cx(double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng)};
}

Mobius random_mobius() {
    cx a = random_cx() + cx(1.2, 0.0), b = random_cx(), c = random_cx(), d;
    d = (cx(1.0) + b * c) / a; // det 1
    return {a, b, c, d};
}

} // namespace

TEST_CASE("zero solution") {
    Jet z = Jet::constant(0.0, 0.7, 5);
    for (double k : {2.0 / 3.0, 1.5, 2.0, 3.0}) CHECK(chazy_residual(k, z).normalised() == 0.0);
}

TEST_CASE("three-pole solution for k=2") {
    JetFn y = general_solution_k2({cx(0.0), cx(1.0), cx(-1.0)});
    for (int i = 0; i < 20; ++i) {
        cx x = random_cx(-2.0, 2.0) + cx(0.0, 1.5);
        CHECK(chazy_residual(2.0, y(x, 4)).normalised() < 1e-12);
    }
}

TEST_CASE("two-pole solution also passes") {
    JetFn y = general_solution_k2({cx(0.3, 0.1), cx(-1.2, 0.4)});
    for (int i = 0; i < 10; ++i)
        CHECK(chazy_residual(2.0, y(random_cx(2.0, 4.0), 4)).normalised() < 1e-12);
}

TEST_CASE("random pole triples") {
    for (int trial = 0; trial < 10; ++trial) {
        JetFn y = general_solution_k2({random_cx(), random_cx() + cx(3.0), random_cx() - cx(3.0)});
        CHECK(chazy_residual(2.0, y(cx(0.2, 1.7), 4)).normalised() < 1e-10);
    }
}

TEST_CASE("coincident poles rejected") {
    CHECK_THROWS_AS(general_solution_k2({cx(1.0), cx(1.0), cx(2.0)}), CoincidentPoles);
}

TEST_CASE("-6/x solves every parameter") {
    JetFn y = [](cx x, int order) { return cx(-6.0) / Jet::variable(x, order); };
    for (double k : {2.0 / 3.0, 1.5, 2.0, 3.0})
        CHECK(chazy_residual(k, y(cx(0.8, 0.3), 4)).normalised() < 1e-14);
}

TEST_CASE("series solutions satisfy the equation away from the base point") {
    for (double k : {2.0 / 3.0, 1.5, 2.0, 3.0}) {
        Jet y = chazy_series_solution(k, 0.1, random_cx(), random_cx(), random_cx(), 9);
        CHECK(chazy_residual(k, y).normalised() < 1e-13);
        // re-expand at a shifted point and check there too
        cx h = 0.05;
        std::vector<cx> sc(7, cx(0.0));
        for (int j = 0; j <= 6; ++j) {
            cx sum = 0.0;
            for (int i = j; i <= y.order(); ++i) {
                double binom = 1.0;
                for (int q = 0; q < j; ++q) binom *= double(i - q) / double(j - q);
                sum += binom * y.coeff(i) * std::pow(h, double(i - j));
            }
            sc[static_cast<size_t>(j)] = sum;
        }
        Jet shifted(cx(0.1) + h, sc);
        Jet direct = chazy_series_solution(k, 0.1 + h, shifted.value(), shifted.deriv(1),
                                           shifted.deriv(2), 6);
        CHECK(chazy_residual(k, shifted).normalised() < 1e-9);
        CHECK(std::abs(shifted.deriv(3) - direct.deriv(3)) < 1e-8);
    }
}

TEST_CASE("fourth-order substitution form") {
    // y = l f'/f turns a solution y into a solution f of the quartic-term
    // equation with m = 4/(36 - k^2); only the first-derivative reading of
    // the quartic term annihilates it.
    struct Case {
        double k, l, m;
    };
    for (Case c : {Case{2.0 / 3.0, 2.0, 9.0 / 80.0}, Case{1.5, 1.5, 16.0 / 135.0},
                   Case{2.0 / 3.0, 1.0, 9.0 / 80.0}}) {
        Jet y = chazy_series_solution(c.k, 0.2, random_cx(), random_cx(), random_cx(), 9);
        Jet f = jet_exp(y.antiderivative(0.0).truncated(9) / cx(c.l));
        CHECK(fourth_order_residual(f, c.l, c.m, QuarticTermReading::FirstDerivative).normalised() <
              1e-10);
        CHECK(fourth_order_residual(f, c.l, c.m, QuarticTermReading::SecondDerivative).normalised() >
              1e-4);
    }
}

TEST_CASE("fourth-order dual form") {
    double k = 2.0 / 3.0, l = 2.0, m = 9.0 / 80.0;
    Jet y = chazy_series_solution(k, 0.2, cx(0.4, 0.1), cx(-0.3, 0.2), cx(0.1, -0.2), 10);
    Jet f = jet_exp(y.antiderivative(0.0).truncated(10) / cx(l));
    Jet h_x = cx(1.0) / f;
    Jet t_x = f.antiderivative(0.0); // d/dx = (1/h) d/dt, so dt/dx = 1/h = f
    Jet h_t = jet_reparam(h_x.truncated(9), t_x.truncated(9));
    CHECK(fourth_order_dual_residual(h_t, l, m, QuarticTermReading::FirstDerivative).normalised() <
          1e-9);
}

TEST_CASE("intc: cubics for k=2") {
    Jet x = Jet::variable(0.9, 5);
    Jet f = x * x * x - 2.0 * x * x + 7.0 * x - 3.0;
    CHECK(intc_residual(2.0, f).normalised() < 1e-14);
}

TEST_CASE("intc: constrained quartic for k=3") {
    cx c = random_cx() + cx(1.0);
    cx e = -c * c / 12.0;
    Jet t = Jet::variable(0.6, 5);
    Jet f = t * t * t * t + c * t * t + e;
    CHECK(intc_residual(3.0, f).normalised() < 1e-13);
}

TEST_CASE("intc from integrated series solutions") {
    for (double k : {2.0 / 3.0, 1.5, 2.0, 3.0}) {
        Jet y = chazy_series_solution(k, 0.15, random_cx(), random_cx(), random_cx(), 9);
        Jet f = jet_exp(cx(2.0 / (k - 6.0)) * y.antiderivative(0.0).truncated(9));
        CHECK(intc_residual(k, f).measure() < 1e-10);
    }
}

TEST_CASE("sixth-order kernel on power solutions") {
    Jet x2 = Jet::variable(1.3, 7);
    CHECK(ode6_residual(x2 * x2).normalised() < 1e-14);
    for (double mexp : {-1.0, 1.0 / 3.0, 2.0 / 3.0, 2.0}) {
        Jet F = jet_pow(Jet::variable(1.3, 7), mexp);
        CHECK(ode6_residual(F).measure() < 1e-11);
    }
}

TEST_CASE("sixth-order kernel on two-point product solutions") {
    for (int trial = 0; trial < 5; ++trial) {
        cx B = random_cx(), C = random_cx() + cx(2.0);
        Jet x = Jet::variable(1.0, 7);
        Jet F = jet_pow(x + B, 1.0 / 3.0) * jet_pow(x + C, 2.0 / 3.0);
        CHECK(ode6_residual(F).normalised() < 1e-11);
    }
}

TEST_CASE("sixth-order kernel ignores affine terms") {
    Jet x = Jet::variable(1.1, 7);
    Jet F = jet_pow(x + cx(0.4, 0.2), 1.0 / 3.0) * jet_pow(x + cx(-1.3, 0.5), 2.0 / 3.0);
    Jet G = F + (cx(3.0, -1.0) * x + cx(0.7, 2.0));
    Residual rf = ode6_residual(F), rg = ode6_residual(G);
    CHECK(std::abs(rf.value - rg.value) / std::max(1.0, rf.scale) < 1e-12);
}

TEST_CASE("dual kernel vanishes on quadratics") {
    Jet x = Jet::variable(0.5, 7);
    Jet H = cx(2.0, 1.0) * x * x + cx(0.3) * x - cx(1.0);
    CHECK(noth_residual(H, NothForm::SixthOrder).normalised() == 0.0);
}

TEST_CASE("seventh- and sixth-order forms differ by one derivative") {
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<cx> c(11);
        for (auto &v : c) v = random_cx();
        Jet j(0.4, c);
        Residual r7 = noth_residual(j, NothForm::SeventhOrder);
        Residual r6 = noth_residual(j.derivative(), NothForm::SixthOrder);
        CHECK(std::abs(r7.value - r6.value) <= 1e-12 * std::max(1.0, r7.scale));
    }
}

TEST_CASE("identity element acts trivially") {
    JetFn y = general_solution_k2({cx(0.0), cx(1.0), cx(-1.0)});
    Mobius id{1.0, 0.0, 0.0, 1.0};
    cx x(0.4, 0.8);
    Jet moved = sl2_apply(id, y, x, 5);
    Jet plain = y(x, 5);
    for (int k = 0; k <= 5; ++k)
        CHECK(std::abs(moved.coeff(k) - plain.coeff(k)) < 1e-12 * (1.0 + std::abs(plain.coeff(k))));
}

TEST_CASE("inversion sends -10/(3x) to -8/(3x)") {
    for (cx b : {cx(1.0), cx(2.0, 0.5), cx(0.3, -1.1)}) {
        Mobius g{0.0, b, -1.0 / b, 0.0};
        JetFn y = [](cx x, int order) { return cx(-10.0 / 3.0) / Jet::variable(x, order); };
        for (cx x : {cx(0.7), cx(1.2, 0.4), cx(-0.8, 0.9)}) {
            Jet moved = sl2_apply(g, y, x, 4);
            cx want = -8.0 / (3.0 * x);
            CHECK(std::abs(moved.value() - want) < 1e-12 * (1.0 + std::abs(want)));
            CHECK(std::abs(moved.deriv(1) - 8.0 / (3.0 * x * x)) < 1e-11);
        }
    }
}

TEST_CASE("inversion sends the zero solution to -6/x") {
    Mobius g{0.0, -1.0, 1.0, 0.0};
    JetFn zero = [](cx x, int order) { return Jet::constant(0.0, x, order); };
    for (cx x : {cx(0.5), cx(-1.3, 0.7)}) {
        Jet moved = sl2_apply(g, zero, x, 4);
        CHECK(std::abs(moved.value() - (-6.0 / x)) < 1e-13);
    }
}

TEST_CASE("action at a pole is rejected") {
    Mobius g{0.0, -1.0, 1.0, 0.0};
    JetFn zero = [](cx x, int order) { return Jet::constant(0.0, x, order); };
    CHECK_THROWS_AS(sl2_apply(g, zero, cx(0.0), 4), PoleOfAction);
}

TEST_CASE("solution transport under random group elements") {
    cx cq(1.3, 0.4);
    QuarticCoeffs q{1.0, 0.0, cq, 0.0, -cq * cq / 12.0};
    std::vector<cxd> k3_poles = poly_roots({q.e, q.d, q.c, q.b, q.a});
    std::vector<cx> k2_poles = {cx(0.0), cx(1.0), cx(-1.0)};
    for (double k : {2.0, 3.0}) {
        JetFn y = k == 2.0 ? general_solution_k2(k2_poles) : general_solution_k3(q);
        const auto &poles = k == 2.0 ? k2_poles : k3_poles;
        for (int trial = 0; trial < 30; ++trial) {
            Mobius g = random_mobius();
            cx x = random_cx(1.5, 4.0) + cx(0.0, 2.0);
            if (std::abs(g.c * x + g.d) < 0.2) continue;
            cx gx = g.apply(x);
            bool near_pole = false;
            for (cx p : poles)
                if (std::abs(gx - p) < 0.15) near_pole = true;
            if (near_pole) continue;
            Jet moved = sl2_apply(g, y, x, 4);
            CHECK(chazy_residual(k, moved).normalised() < 1e-8);
        }
    }
}

TEST_CASE("weight -1 transform preserves the sixth-order kernel") {
    JetFn F = [](cx x, int order) {
        Jet j = Jet::variable(x, order);
        return j * j;
    };
    for (int trial = 0; trial < 10; ++trial) {
        Mobius g = random_mobius();
        cx x = random_cx(1.0, 3.0);
        if (std::abs(g.c * x + g.d) < 0.3) continue;
        Jet moved = weight_transform(g, F, -1.0, x, 7);
        cx want = (g.a * x + g.b) * (g.a * x + g.b) / (g.c * x + g.d);
        CHECK(std::abs(moved.value() - want) < 1e-10 * (1.0 + std::abs(want)));
        CHECK(ode6_residual(moved).normalised() < 1e-10);
    }
}

TEST_CASE("second derivative law of the weight -1 transform") {
    JetFn F = [](cx x, int order) { return jet_exp(jet_sin(Jet::variable(x, order))); };
    for (int trial = 0; trial < 20; ++trial) {
        Mobius g = random_mobius();
        cx x = random_cx(1.0, 2.5);
        if (std::abs(g.c * x + g.d) < 0.3) continue;
        Jet moved = weight_transform(g, F, -1.0, x, 4);
        cx den = g.c * x + g.d;
        cx want = F(g.apply(x), 2).deriv(2) / (den * den * den);
        CHECK(std::abs(moved.deriv(2) - want) < 1e-8 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("parabola is self-dual") {
    cx x0(0.7, 0.2);
    Jet x = Jet::variable(x0, 6);
    Jet F = x * x / 2.0;
    auto [t, H] = legendre_dual(x, F);
    CHECK(std::abs(t.value() - x0) < 1e-13);
    CHECK(std::abs(H.value() - x0 * x0 / 2.0) < 1e-12);
    CHECK(std::abs(H.deriv(2) - cx(1.0)) < 1e-10);
}

TEST_CASE("duality is an involution") {
    for (int trial = 0; trial < 50; ++trial) {
        cx x0 = random_cx() + cx(1.5);
        Jet x = Jet::variable(x0, 6);
        Jet F = Jet::constant(0.0, x0, 6);
        cx cs[4];
        for (auto &v : cs) v = random_cx();
        Jet p = Jet::constant(1.0, x0, 6);
        for (int d = 0; d < 4; ++d) {
            p = p * x;
            F = F + cs[d] * p;
        }
        if (std::abs(F.deriv(2)) < 0.1) continue;
        auto [t, H] = legendre_dual(x, F);
        auto [xb, Fb] = legendre_dual(t, H);
        CHECK(std::abs(xb.value() - x0) < 1e-9);
        for (int k = 0; k <= 3; ++k)
            CHECK(std::abs(Fb.deriv(k) - F.deriv(k)) < 1e-9 * (1.0 + std::abs(F.deriv(k))));
    }
}

TEST_CASE("degenerate dual is rejected") {
    Jet x = Jet::variable(0.3, 5);
    CHECK_THROWS_AS(legendre_dual(x, cx(2.0) * x + cx(1.0)), DegenerateDual);
}

TEST_CASE("constrained quartic poles solve k=3") {
    // b = d = 0, 12ae + c^2 = 0
    cx c = cx(1.3, 0.4);
    QuarticCoeffs q{1.0, 0.0, c, 0.0, -c * c / 12.0};
    JetFn y = general_solution_k3(q);
    for (int i = 0; i < 10; ++i)
        CHECK(chazy_residual(3.0, y(random_cx(2.0, 4.0) + cx(0.0, 2.0), 4)).normalised() < 1e-10);
}

TEST_CASE("conic pole triples solve both k=3 and k=2") {
    for (int trial = 0; trial < 20; ++trial) {
        cx t1 = random_cx(), t2 = random_cx() + cx(2.0);
        // remaining conic coordinate from t^2 - (t1+t2)t + t1^2+t2^2-t1t2 = 0
        cx b = t1 + t2, cc = t1 * t1 + t2 * t2 - t1 * t2;
        cx disc = std::sqrt(b * b - 4.0 * cc);
        cx t3 = (b + disc) / 2.0;
        JetFn y3 = [=](cx x, int order) {
            Jet X = Jet::variable(x, order);
            return cx(-1.5) / (X - t1) + cx(-1.5) / (X - t2) + cx(-1.5) / (X - t3);
        };
        JetFn y2 = [=](cx x, int order) {
            Jet X = Jet::variable(x, order);
            return cx(-2.0) / (X - t1) + cx(-2.0) / (X - t2) + cx(-2.0) / (X - t3);
        };
        cx x = cx(0.3, 3.0);
        Jet j3 = y3(x, 4), j2 = y2(x, 4);
        CHECK(chazy_residual(3.0, j3).normalised() < 1e-10);
        CHECK(chazy_residual(2.0, j2).normalised() < 1e-10);
        // the two solutions are a constant rescaling of one another
        for (int k = 0; k <= 4; ++k)
            CHECK(std::abs(j3.coeff(k) - 0.75 * j2.coeff(k)) < 1e-12 * (1.0 + std::abs(j2.coeff(k))));
    }
}

TEST_CASE("violated constraint is rejected and fails the residual") {
    QuarticCoeffs bad{1.0, 0.0, cx(1.0), 0.0, cx(1.0)};
    CHECK_THROWS_AS(general_solution_k3(bad), ConstraintViolated);
    // force the pole sum anyway: residual must be far from zero
    std::vector<cxd> roots = poly_roots({bad.e, bad.d, bad.c, bad.b, bad.a});
    JetFn y = [roots](cx x, int order) {
        Jet X = Jet::variable(x, order);
        Jet s = Jet::constant(0.0, x, order);
        for (cx p : roots) s = s + cx(-1.5) / (X - p);
        return s;
    };
    CHECK(chazy_residual(3.0, y(cx(0.4, 1.7), 4)).normalised() > 1e-3);
}

TEST_CASE("multiple roots are rejected") {
    // (t^2 - 1)^2 has double roots and satisfies the constraint
    QuarticCoeffs q{1.0, 0.0, cx(-2.0), 0.0, cx(1.0)};
    cx constraint = 12.0 * q.a * q.e - 3.0 * q.b * q.d + q.c * q.c;
    CHECK(std::abs(constraint - 16.0) < 1e-14); // not admissible either
    QuarticCoeffs qq{0.0, 1.0, cx(-2.0), cx(4.0 / 3.0), 0.0};
    // cubic t^3 - 2t^2 + (4/3)t: constraint -3bd + c^2 = -4 + 4 = 0
    CHECK_NOTHROW(general_solution_k3(qq));
}
