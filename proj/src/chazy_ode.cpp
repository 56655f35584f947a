#include "chazylab/chazy_ode.hpp"

#include <cmath>

#include "chazylab/quartic.hpp"

namespace chazylab {

Residual chazy_residual(double k, const Jet &y) {
    cx y0 = y.value(), y1 = y.deriv(1), y2 = y.deriv(2), y3 = y.deriv(3);
    cx w = 6.0 * y1 - y0 * y0;
    Residual r;
    r.add(y3);
    r.add(-2.0 * y2 * y0);
    r.add(3.0 * y1 * y1);
    r.add(-4.0 / (36.0 - k * k) * w * w);
    return r;
}

Residual intc_residual(double k, const Jet &f) {
    cx f0 = f.value(), f1 = f.deriv(1), f2 = f.deriv(2), f3 = f.deriv(3), f4 = f.deriv(4);
    Residual r;
    r.add(f0 * f4);
    r.add(-(k - 2.0) * f1 * f3);
    r.add(3.0 * k * (k - 2.0) / (2.0 * (k + 6.0)) * f2 * f2);
    return r;
}

Residual ode6_residual(const Jet &F) {
    cx F2 = F.deriv(2), F3 = F.deriv(3), F4 = F.deriv(4), F5 = F.deriv(5), F6 = F.deriv(6);
    Residual r;
    r.add(10.0 * F6 * F2 * F2 * F2);
    r.add(-80.0 * F2 * F2 * F3 * F5);
    r.add(-51.0 * F2 * F2 * F4 * F4);
    r.add(336.0 * F2 * F3 * F3 * F4);
    r.add(-224.0 * F3 * F3 * F3 * F3);
    return r;
}

Residual noth_residual(const Jet &j, NothForm form) {
    int off = form == NothForm::SeventhOrder ? 1 : 0;
    cx d2 = j.deriv(2 + off), d3 = j.deriv(3 + off), d4 = j.deriv(4 + off), d5 = j.deriv(5 + off),
       d6 = j.deriv(6 + off);
    Residual r;
    r.add(10.0 * d2 * d2 * d2 * d6);
    r.add(-70.0 * d2 * d2 * d3 * d5);
    r.add(-49.0 * d2 * d2 * d4 * d4);
    r.add(280.0 * d2 * d3 * d3 * d4);
    r.add(-175.0 * d3 * d3 * d3 * d3);
    return r;
}

Jet sl2_apply(const Mobius &g, const JetFn &y, cx x, int order) {
    if (std::abs(g.c * x + g.d) < 1e-13) throw PoleOfAction();
    Jet X = Jet::variable(x, order);
    Jet den = g.c * X + g.d;
    Jet arg = (g.a * X + g.b) / den;
    Jet inner = y(arg.value(), order);
    Jet moved = jet_compose(inner, arg);
    return moved / (den * den) - (6.0 * g.c) / den;
}

Jet weight_transform(const Mobius &g, const JetFn &F, double weight, cx x, int order,
                     BranchSpec branch) {
    if (std::abs(g.c * x + g.d) < 1e-13) throw PoleOfAction();
    Jet X = Jet::variable(x, order);
    Jet den = g.c * X + g.d;
    Jet arg = (g.a * X + g.b) / den;
    Jet inner = F(arg.value(), order);
    Jet moved = jet_compose(inner, arg);
    return moved * jet_pow(den, -weight, branch);
}

std::pair<Jet, Jet> legendre_dual(const Jet &x_jet, const Jet &F_jet) {
    Jet xp = x_jet.derivative();
    Jet Fp = F_jet.derivative();
    if (std::abs(xp.value()) < 1e-13) throw DegenerateDual();
    Jet t_p = Fp / xp; // dF/dx as a function of the parameter
    if (std::abs(t_p.deriv(1)) < 1e-13) throw DegenerateDual();
    int n = t_p.order();
    Jet H_p = x_jet.truncated(n) * t_p - F_jet.truncated(n);
    Jet H_of_t = jet_reparam(H_p, t_p);
    return {Jet::variable(t_p.value(), n), H_of_t};
}

namespace {

JetFn pole_sum_solution(std::vector<cx> poles, double coeff) {
    for (size_t i = 0; i < poles.size(); ++i)
        for (size_t j = i + 1; j < poles.size(); ++j)
            if (std::abs(poles[i] - poles[j]) < 1e-10) throw CoincidentPoles();
    return [poles, coeff](cx x, int order) {
        Jet X = Jet::variable(x, order);
        Jet y = Jet::constant(0.0, x, order);
        for (cx p : poles) y = y + cx(coeff) / (X - p);
        return y;
    };
}

} // namespace

JetFn general_solution_k2(const std::vector<cx> &poles) { return pole_sum_solution(poles, -2.0); }

JetFn general_solution_k3(const QuarticCoeffs &q) {
    cx constraint = 12.0 * q.a * q.e - 3.0 * q.b * q.d + q.c * q.c;
    double scale = std::abs(q.a) + std::abs(q.b) + std::abs(q.c) + std::abs(q.d) + std::abs(q.e);
    if (std::abs(constraint) > 1e-12 * std::max(1.0, scale * scale)) throw ConstraintViolated();
    std::vector<cxd> roots = poly_roots({q.e, q.d, q.c, q.b, q.a});
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-8) throw MultipleRoots();
    std::vector<cx> poles(roots.begin(), roots.end());
    return pole_sum_solution(poles, -1.5);
}

Jet chazy_series_solution(double k, cx x0, cx y0, cx y1, cx y2, int order) {
    std::vector<cx> c(static_cast<size_t>(order) + 1, cx(0.0));
    c[0] = y0;
    if (order >= 1) c[1] = y1;
    if (order >= 2) c[2] = y2 / 2.0;
    double m = 4.0 / (36.0 - k * k);
    // fill coefficient n+3 from coefficient n of the right-hand side
    for (int n = 0; n + 3 <= order; ++n) {
        Jet y(x0, std::vector<cx>(c.begin(), c.begin() + n + 3));
        Jet yp = y.derivative();
        Jet ypp = yp.derivative();
        Jet w = 6.0 * yp.truncated(n) - (y * y).truncated(n);
        Jet rhs = 2.0 * (ypp.truncated(n) * y.truncated(n)) - 3.0 * (yp * yp).truncated(n) +
                  m * (w * w);
        cx rn = rhs.coeff(n);
        c[static_cast<size_t>(n + 3)] =
            rn / (cx(double(n + 1)) * cx(double(n + 2)) * cx(double(n + 3)));
    }
    return Jet(x0, std::move(c));
}

} // namespace chazylab
