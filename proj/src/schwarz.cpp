#include "chazylab/schwarz.hpp"

#include <algorithm>
#include <cmath>

namespace chazylab {

namespace {

double rat_to_double(const Rat &r) {
    return static_cast<double>(boost::multiprecision::numerator(r)) /
           static_cast<double>(boost::multiprecision::denominator(r));
}

bool near_singular(cx s) { return std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12; }

} // namespace

AbcParams angles_to_abc(const TriangleAngles &t) {
    Rat sum = t.alpha + t.beta + t.gamma;
    return {(1 - sum) / 2, (1 + t.alpha - t.beta - t.gamma) / 2, 1 - t.beta};
}

HypParams to_hyp_params(const AbcParams &p) {
    return {cx(rat_to_double(p.a)), cx(rat_to_double(p.b)), cx(rat_to_double(p.c))};
}

cx potential(const TriangleAngles &t, cx s) {
    if (near_singular(s)) throw SingularPoint();
    double a2 = rat_to_double(t.alpha * t.alpha);
    double b2 = rat_to_double(t.beta * t.beta);
    double g2 = rat_to_double(t.gamma * t.gamma);
    return (1.0 - b2) / (s * s) + (1.0 - g2) / ((s - 1.0) * (s - 1.0)) +
           (b2 + g2 - a2 - 1.0) / (s * (s - 1.0));
}

cx schwarzian(const Jet &s_jet) {
    cx s1 = s_jet.deriv(1);
    if (std::abs(s1) < 1e-13) throw CriticalPoint();
    cx s2 = s_jet.deriv(2), s3 = s_jet.deriv(3);
    cx q = s2 / s1;
    return s3 / s1 - 1.5 * q * q;
}

Residual schwarz_residual(const TriangleAngles &t, const Jet &s_jet) {
    cx s1 = s_jet.deriv(1);
    Residual r;
    r.add(schwarzian(s_jet));
    r.add(0.5 * s1 * s1 * potential(t, s_jet.value()));
    return r;
}

Jet triangle_map_jet(const TriangleAngles &t, cx s, int order) {
    AbcParams p = angles_to_abc(t);
    if (boost::multiprecision::denominator(p.c) == 1) throw DegenerateC();
    HypParams h = to_hyp_params(p);
    HypParams h2{h.a - h.c + 1.0, h.b - h.c + 1.0, 2.0 - h.c};
    Jet S = Jet::variable(s, order);
    Jet num = hyp2f1_jet(h2, s, order);
    Jet den = hyp2f1_jet(h, s, order);
    return jet_pow(S, 1.0 - h.c.real()) * num / den;
}

cx triangle_map(const TriangleAngles &t, cx s) { return triangle_map_jet(t, s, 0).value(); }

cx invert_triangle_map(const TriangleAngles &t, cx x, cx seed) {
    cx s = seed;
    for (int it = 0; it < 60; ++it) {
        Jet j = triangle_map_jet(t, s, 1);
        cx err = j.value() - x;
        if (std::abs(err) < 1e-12 * (1.0 + std::abs(x))) return s;
        cx d = j.deriv(1);
        if (std::abs(d) < 1e-300) throw CriticalPoint();
        s -= err / d;
    }
    if (std::abs(triangle_map(t, s) - x) < 1e-11 * (1.0 + std::abs(x))) return s;
    throw NoConvergence("triangle map inversion did not converge from this seed");
}

std::array<Jet, 3> omegas(const Jet &s_jet) {
    if (near_singular(s_jet.value())) throw SingularPoint();
    Jet sp = s_jet.derivative();
    if (std::abs(sp.value()) < 1e-13) throw CriticalPoint();
    int n = sp.order();
    Jet s = s_jet.truncated(n);
    Jet o1 = -0.5 * jet_log(sp / (s * (s - 1.0))).derivative();
    Jet o2 = -0.5 * jet_log(sp / (s - 1.0)).derivative();
    Jet o3 = -0.5 * jet_log(sp / s).derivative();
    return {o1, o2, o3};
}

Jet chazy_from_schwarz(const Recipe &r, const Jet &s_jet) {
    auto o = omegas(s_jet);
    return cx(double(r.c1)) * o[0] + cx(double(r.c2)) * o[1] + cx(double(r.c3)) * o[2];
}

std::pair<Rat, Rat> recipe_exponents(const Recipe &r) {
    return {Rat(-(r.c1 + r.c3), 2), Rat(-(r.c1 + r.c2), 2)};
}

Jet chazy_from_exponents(double a, double b, const Jet &s_jet) {
    if (near_singular(s_jet.value())) throw SingularPoint();
    Jet sp = s_jet.derivative();
    if (std::abs(sp.value()) < 1e-13) throw CriticalPoint();
    int n = sp.order();
    Jet s = s_jet.truncated(n);
    return (jet_log(sp) * 3.0 - jet_log(s) * cx(a) - jet_log(s - 1.0) * cx(b)).derivative();
}

std::vector<RecipeEntry> recipe_table() {
    std::vector<RecipeEntry> entries;
    auto add = [&](Rat a, Rat b, Rat g, int c1, int c2, int c3, const Rat &k) {
        if (a <= 0 || b <= 0 || g <= 0) return;
        for (const RecipeEntry &e : entries)
            if (e.angles.alpha == a && e.angles.beta == b && e.angles.gamma == g &&
                e.recipe.c1 == c1 && e.recipe.c2 == c2 && e.recipe.c3 == c3 && e.k == k)
                return;
        entries.push_back({{a, b, g}, {c1, c2, c3}, k});
    };
    auto add_cyc = [&](Rat a, Rat b, Rat g, int c1, int c2, int c3, const Rat &k) {
        add(a, b, g, c1, c2, c3, k);
        add(b, g, a, c2, c3, c1, k);
        add(g, a, b, c3, c1, c2, k);
    };
    const Rat third(1, 3), half(1, 2), two_thirds(2, 3);
    for (const Rat &k : {Rat(2), Rat(2, 3), Rat(3), Rat(3, 2)}) {
        Rat r1 = 1 / k, r2 = 2 / k, r3 = 3 / k, r4 = 4 / k;
        add_cyc(r2, r2, r2, -2, -2, -2, k);
        add_cyc(r2, third, third, -2, -2, -2, k);
        add_cyc(r1, third, half, -1, -2, -3, k);
        add_cyc(r1, r2, half, -1, -2, -3, k);
        add_cyc(r1, third, r3, -1, -2, -3, k);
        add_cyc(r4, r1, r1, -4, -1, -1, k);
        add_cyc(two_thirds, r1, r1, -4, -1, -1, k);
    }
    return entries;
}

Jet schwarz_series_solution(const TriangleAngles &t, cx x0, cx s0, cx s1, cx s2, int order) {
    if (near_singular(s0)) throw SingularPoint();
    if (std::abs(s1) < 1e-13) throw CriticalPoint();
    double a2 = rat_to_double(t.alpha * t.alpha);
    double b2 = rat_to_double(t.beta * t.beta);
    double g2 = rat_to_double(t.gamma * t.gamma);
    std::vector<cx> c(static_cast<size_t>(order) + 1, cx(0.0));
    c[0] = s0;
    if (order >= 1) c[1] = s1;
    if (order >= 2) c[2] = s2 / 2.0;
    // s''' = (3/2)(s'')^2/s' - (1/2)(s')^3 V(s), filled one coefficient at a time
    for (int n = 0; n + 3 <= order; ++n) {
        Jet s(x0, std::vector<cx>(c.begin(), c.begin() + n + 3));
        Jet sp = s.derivative().truncated(n);
        Jet spp = s.derivative().derivative().truncated(n);
        Jet sn = s.truncated(n);
        Jet V = (1.0 - b2) / (sn * sn) + (1.0 - g2) / ((sn - 1.0) * (sn - 1.0)) +
                (b2 + g2 - a2 - 1.0) / (sn * (sn - 1.0));
        Jet rhs = 1.5 * (spp * spp) / sp - 0.5 * (sp * sp * sp) * V;
        c[static_cast<size_t>(n + 3)] =
            rhs.coeff(n) / (cx(double(n + 1)) * cx(double(n + 2)) * cx(double(n + 3)));
    }
    return Jet(x0, std::move(c));
}

} // namespace chazylab
