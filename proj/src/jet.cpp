#include "chazylab/jet.hpp"

#include <algorithm>
#include <cmath>

namespace chazylab {

namespace {
constexpr double kTinyConst = 1e-300;

double fact(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
} // namespace

cx Jet::deriv(int k) const { return coeff(k) * fact(k); }

Jet Jet::truncated(int new_order) const {
    std::vector<cx> c(static_cast<size_t>(new_order) + 1, cx(0.0));
    for (int k = 0; k <= new_order && k <= order(); ++k) c[static_cast<size_t>(k)] = coeff(k);
    return Jet(base_, std::move(c));
}

Jet Jet::derivative() const {
    int n = std::max(order() - 1, 0);
    std::vector<cx> c(static_cast<size_t>(n) + 1, cx(0.0));
    for (int k = 0; k < order(); ++k) c[static_cast<size_t>(k)] = coeff(k + 1) * cx(k + 1.0);
    return Jet(base_, std::move(c));
}

Jet Jet::antiderivative(cx const0) const {
    std::vector<cx> c(static_cast<size_t>(order()) + 2, cx(0.0));
    c[0] = const0;
    for (int k = 0; k <= order(); ++k) c[static_cast<size_t>(k) + 1] = coeff(k) / cx(k + 1.0);
    return Jet(base_, std::move(c));
}

Jet operator+(const Jet &a, const Jet &b) {
    Jet r = a;
    for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] += b.coeff(k);
    return r;
}
Jet operator-(const Jet &a, const Jet &b) {
    Jet r = a;
    for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<size_t>(k)] -= b.coeff(k);
    return r;
}
Jet operator-(const Jet &a) {
    Jet r = a;
    for (auto &v : r.c_) v = -v;
    return r;
}

Jet operator*(const Jet &a, const Jet &b) {
    int n = a.order();
    std::vector<cx> c(static_cast<size_t>(n) + 1, cx(0.0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return Jet(a.base_, std::move(c));
}

Jet operator/(const Jet &a, const Jet &b) {
    if (std::abs(b.value()) < kTinyConst) throw DivisionByZeroSeries();
    int n = a.order();
    std::vector<cx> q(static_cast<size_t>(n) + 1, cx(0.0));
    for (int k = 0; k <= n; ++k) {
        cx s = a.coeff(k);
        for (int j = 0; j < k; ++j) s -= q[static_cast<size_t>(j)] * b.coeff(k - j);
        q[static_cast<size_t>(k)] = s / b.value();
    }
    return Jet(a.base_, std::move(q));
}

Jet operator+(const Jet &a, cx s) {
    Jet r = a;
    r.coeff(0) += s;
    return r;
}
Jet operator+(cx s, const Jet &a) { return a + s; }
Jet operator-(const Jet &a, cx s) { return a + (-s); }
Jet operator-(cx s, const Jet &a) { return (-a) + s; }
Jet operator*(const Jet &a, cx s) { return a * Jet::constant(s, a.base(), a.order()); }
Jet operator*(cx s, const Jet &a) { return a * s; }
Jet operator/(const Jet &a, cx s) { return a * (cx(1.0) / s); }
Jet operator/(cx s, const Jet &a) { return Jet::constant(s, a.base(), a.order()) / a; }

// exp via E' = E a': k E_k = sum_{j=1..k} j a_j E_{k-j}
Jet jet_exp(const Jet &a) {
    int n = a.order();
    std::vector<cx> e(static_cast<size_t>(n) + 1, cx(0.0));
    e[0] = std::exp(a.value());
    for (int k = 1; k <= n; ++k) {
        cx s = 0.0;
        for (int j = 1; j <= k; ++j) s += cx(double(j)) * a.coeff(j) * e[static_cast<size_t>(k - j)];
        e[static_cast<size_t>(k)] = s / cx(double(k));
    }
    return Jet(a.base_, std::move(e));
}

// log via L' = a'/a
Jet jet_log(const Jet &a, BranchSpec branch) {
    if (std::abs(a.value()) < kTinyConst) throw BranchPointError();
    constexpr double two_pi = 6.283185307179586476925287;
    cx l0 = std::log(a.value()) + cx(0.0, two_pi * branch.log_branch);
    Jet lp = a.derivative() / a.truncated(std::max(a.order() - 1, 0));
    Jet l = lp.antiderivative(l0);
    return l.truncated(a.order());
}

Jet jet_pow(const Jet &a, double r, BranchSpec branch) {
    if (std::abs(a.value()) < kTinyConst) throw BranchPointError();
    return jet_exp(jet_log(a, branch) * cx(r));
}

Jet jet_sqrt(const Jet &a, BranchSpec branch) { return jet_pow(a, 0.5, branch); }

Jet jet_sin(const Jet &a) {
    // joint recurrence: S' = C a', C' = -S a'
    int n = a.order();
    std::vector<cx> s(static_cast<size_t>(n) + 1), c(static_cast<size_t>(n) + 1);
    s[0] = std::sin(a.value());
    c[0] = std::cos(a.value());
    for (int k = 1; k <= n; ++k) {
        cx ss = 0.0, cs = 0.0;
        for (int j = 1; j <= k; ++j) {
            ss += cx(double(j)) * a.coeff(j) * c[static_cast<size_t>(k - j)];
            cs -= cx(double(j)) * a.coeff(j) * s[static_cast<size_t>(k - j)];
        }
        s[static_cast<size_t>(k)] = ss / cx(double(k));
        c[static_cast<size_t>(k)] = cs / cx(double(k));
    }
    return Jet(a.base(), std::move(s));
}

Jet jet_cos(const Jet &a) {
    int n = a.order();
    std::vector<cx> s(static_cast<size_t>(n) + 1), c(static_cast<size_t>(n) + 1);
    s[0] = std::sin(a.value());
    c[0] = std::cos(a.value());
    for (int k = 1; k <= n; ++k) {
        cx ss = 0.0, cs = 0.0;
        for (int j = 1; j <= k; ++j) {
            ss += cx(double(j)) * a.coeff(j) * c[static_cast<size_t>(k - j)];
            cs -= cx(double(j)) * a.coeff(j) * s[static_cast<size_t>(k - j)];
        }
        s[static_cast<size_t>(k)] = ss / cx(double(k));
        c[static_cast<size_t>(k)] = cs / cx(double(k));
    }
    return Jet(a.base(), std::move(c));
}

Jet jet_tan(const Jet &a) { return jet_sin(a) / jet_cos(a); }

Jet jet_compose(const Jet &outer, const Jet &inner) {
    if (std::abs(inner.value() - outer.base()) > 1e-9 * (1.0 + std::abs(outer.base())))
        throw BaseMismatch();
    int n = inner.order();
    // u = inner - inner(0); Horner on series
    Jet u = inner;
    u.coeff(0) = 0.0;
    Jet r = Jet::constant(outer.coeff(outer.order()), inner.base(), n);
    for (int k = outer.order() - 1; k >= 0; --k) r = r * u + outer.coeff(k);
    return r;
}

Jet jet_revert(const Jet &a) {
    if (std::abs(a.coeff(1)) < kTinyConst) throw NonInvertibleSeries();
    int n = a.order();
    // b(y) with a(b(y)) = y, expanded at y0 = a(x0); b(y0) = x0.
    cx y0 = a.value();
    // Newton iteration on truncated series: b <- b - (a(b) - id)/a'(b)
    Jet id = Jet::variable(y0, n);
    std::vector<cx> binit(static_cast<size_t>(n) + 1, cx(0.0));
    binit[0] = a.base();
    if (n >= 1) binit[1] = cx(1.0) / a.coeff(1);
    Jet b(y0, std::move(binit));
    Jet ap = a.derivative().truncated(n);
    for (int it = 0; it < n + 2; ++it) {
        Jet fb = jet_compose(a, b);
        Jet fpb = jet_compose(ap, b);
        b = b - (fb - id) / fpb;
    }
    return b;
}

Jet jet_reparam(const Jet &f_of_p, const Jet &g_of_p) {
    return jet_compose(f_of_p, jet_revert(g_of_p));
}

} // namespace chazylab
