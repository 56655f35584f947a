#include "chazylab/duality.hpp"

#include <algorithm>
#include <cmath>

#include "chazylab/quartic.hpp"

namespace chazylab {

namespace {

Rat eval_rat(const PolyQ &p, const Rat &x) {
    Rat r = 0;
    for (int i = p.degree(); i >= 0; --i) r = r * x + p.coeff(i);
    return r;
}

// coefficient of y^j, as a polynomial in x
PolyQ y_part(const PolyQ2 &p, int j) {
    std::vector<Rat> c;
    for (int i = 0; i <= p.deg_x(); ++i) c.push_back(p.coeff(i, j));
    return PolyQ(std::move(c));
}

// synthetic division by (x - r); returns true and the quotient when exact
bool deflate(PolyQ &p, const Rat &r) {
    if (p.degree() < 1) return false;
    std::vector<Rat> q(static_cast<size_t>(p.degree()), Rat(0));
    Rat carry = 0;
    for (int i = p.degree(); i >= 1; --i) {
        carry = p.coeff(i) + r * carry;
        q[static_cast<size_t>(i - 1)] = carry;
    }
    if (p.coeff(0) + r * carry != 0) return false;
    p = PolyQ(std::move(q));
    return true;
}

// best rational approximation of v with denominator bounded by qmax
Rat rationalise(double v, long long qmax = 1000000) {
    long long p0 = 1, q0 = 0, p1 = static_cast<long long>(std::floor(v)), q1 = 1;
    double frac = v - std::floor(v);
    for (int iter = 0; iter < 40 && frac > 1e-12; ++iter) {
        double inv = 1.0 / frac;
        long long a = static_cast<long long>(std::floor(inv));
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > qmax) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        frac = inv - std::floor(inv);
    }
    return Rat(p1, q1);
}

} // namespace

std::vector<Rat> rational_roots(const PolyQ &p_in) {
    PolyQ p = p_in;
    std::vector<Rat> roots;
    if (p.degree() < 1) return roots;
    std::vector<cxd> dc;
    for (int i = 0; i <= p.degree(); ++i) dc.push_back(static_cast<double>(p.coeff(i)));
    for (cxd z : poly_roots(dc)) {
        if (std::abs(z.imag()) > 1e-7) continue;
        Rat cand = rationalise(z.real());
        if (eval_rat(p_in, cand) != 0) continue;
        while (deflate(p, cand)) roots.push_back(cand);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

DualityScanResult duality_parameter_scan() {
    using P2 = PolyQ2;
    P2 X = P2::var_x(), Y = P2::var_y();
    auto C = [](long long n, long long d = 1) { return P2::constant(Rat(n, d)); };

    P2 J = C(7, 2) - X;
    // 36 j n, eliminated from the second matching equation
    P2 N = C(3) * J + C(4) + C(3) * X - C(36) * X * Y;
    P2 L3 = C(12) * X * X * Y - C(144) * X * Y - C(2) * X + C(59);
    P2 L4 = X * X * X * Y - C(24) * X * X * Y + C(144) * X * Y + C(4) * X - C(48);
    P2 E3 = C(3) * L3 - (J + C(6)) * N - C(36);
    P2 E4 = C(36) * L4 + (J + C(6)) * (J + C(6)) * N + C(36) * (J + C(6));

    PolyQ a3 = y_part(E3, 1), b3 = y_part(E3, 0);
    PolyQ a4 = y_part(E4, 1), b4 = y_part(E4, 0);

    DualityScanResult out;
    out.elimination = a3 * b4 - a4 * b3;

    for (const Rat &l : rational_roots(out.elimination)) {
        Rat j = Rat(7, 2) - l;
        if (l == 0 || j == 0) {
            out.degenerate_l.push_back(l);
            continue;
        }
        Rat am = eval_rat(a3, l), bm = eval_rat(b3, l);
        if (am == 0) {
            am = eval_rat(a4, l);
            bm = eval_rat(b4, l);
            if (am == 0) {
                out.degenerate_l.push_back(l);
                continue;
            }
        }
        Rat m = -bm / am;
        // the other matching equation must agree
        if (eval_rat(a4, l) * m + eval_rat(b4, l) != 0 || eval_rat(a3, l) * m + eval_rat(b3, l) != 0) {
            out.degenerate_l.push_back(l);
            continue;
        }
        Rat n = (3 * j + 4 + 3 * l - 36 * l * m) / (36 * j);
        out.matches.push_back({l, m, j, n});
    }
    return out;
}

std::vector<Rat> duality_m_values() {
    std::vector<Rat> ms;
    for (const auto &match : duality_parameter_scan().matches) ms.push_back(match.m);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return ms;
}

Residual fourth_order_residual(const Jet &f, double l, double m, QuarticTermReading reading) {
    cx f0 = f.value(), f1 = f.deriv(1), f2 = f.deriv(2), f3 = f.deriv(3), f4 = f.deriv(4);
    cx quart = reading == QuarticTermReading::FirstDerivative ? f1 * f1 * f1 * f1 : f2 * f2 * f2 * f2;
    Residual r;
    r.add(f0 * f0 * f0 * f4);
    r.add(-2.0 * (l + 2.0) * f0 * f0 * f1 * f3);
    r.add(3.0 * (-12.0 * l * m + l - 1.0) * f0 * f0 * f2 * f2);
    r.add(12.0 * (l * l * m + 6.0 * l * m + 1.0) * f0 * f1 * f1 * f2);
    r.add(-(l * l * l * m + 12.0 * l * l * m + 36.0 * l * m + l + 6.0) * quart);
    return r;
}

Residual fourth_order_dual_residual(const Jet &h, double l, double m, QuarticTermReading reading) {
    cx h0 = h.value(), h1 = h.deriv(1), h2 = h.deriv(2), h3 = h.deriv(3), h4 = h.deriv(4);
    cx quart = reading == QuarticTermReading::FirstDerivative ? h1 * h1 * h1 * h1 : h2 * h2 * h2 * h2;
    Residual r;
    r.add(h0 * h0 * h0 * h4);
    r.add((2.0 * l - 11.0) * h0 * h0 * h1 * h3);
    r.add((36.0 * l * m - 3.0 * l - 7.0) * h0 * h2 * h2 * h0);
    r.add((12.0 * l * l * m - 144.0 * l * m - 2.0 * l + 59.0) * h0 * h1 * h1 * h2);
    r.add((l * l * l * m - 24.0 * l * l * m + 144.0 * l * m + 4.0 * l - 48.0) * quart);
    return r;
}

} // namespace chazylab
