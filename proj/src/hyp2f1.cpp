#include "chazylab/hyp2f1.hpp"

#include <cmath>
#include <cstdlib>

namespace chazylab {

namespace {

constexpr int kMaxTerms = 10000;
constexpr double kTermTol = 1e-16;

bool is_nonpositive_int(cx v, int *n_out = nullptr) {
    if (std::abs(v.imag()) > 1e-12) return false;
    double r = v.real();
    double nr = std::round(r);
    if (std::abs(r - nr) > 1e-12 || nr > 0.5) return false;
    if (n_out) *n_out = static_cast<int>(-nr);
    return true;
}

// degree of termination: smallest n with a or b equal to -n, or -1
int terminating_degree(const HypParams &p) {
    int na = -1, nb = -1;
    bool ta = is_nonpositive_int(p.a, &na);
    bool tb = is_nonpositive_int(p.b, &nb);
    if (!ta && !tb) return -1;
    if (ta && tb) return std::min(na, nb);
    return ta ? na : nb;
}

cx series(const HypParams &p, cx z) {
    int nterm = terminating_degree(p);
    int nc = 0;
    if (is_nonpositive_int(p.c, &nc) && (nterm < 0 || nterm > nc)) throw PolarParameter();
    cx term = 1.0, sum = 1.0;
    int below = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        if (nterm >= 0 && n >= nterm) return sum;
        term *= (p.a + cx(double(n))) * (p.b + cx(double(n))) /
                ((p.c + cx(double(n))) * cx(double(n + 1))) * z;
        sum += term;
        if (std::abs(term) < kTermTol * std::abs(sum)) {
            if (++below >= 3) return sum;
        } else {
            below = 0;
        }
    }
    throw NoConvergence("2F1: series did not converge within the term cap");
}

} // namespace

cx hyp2f1(const HypParams &p, cx z) {
    if (z == cx(0.0)) return 1.0;
    if (terminating_degree(p) >= 0) return series(p, z);
    if (std::abs(z) <= 0.9) return series(p, z);
    cx zp = z / (z - cx(1.0));
    if (std::abs(zp) <= 0.9) {
        // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
        return std::pow(cx(1.0) - z, -p.a) * series({p.a, p.c - p.b, p.c}, zp);
    }
    throw NoConvergence("2F1: argument outside the handled domain");
}

Jet hyp2f1_jet(const HypParams &p, cx z0, int order) {
    std::vector<cx> c(static_cast<size_t>(order) + 1);
    cx ladder = 1.0; // (a)_n (b)_n / ((c)_n n!)
    HypParams q = p;
    for (int n = 0; n <= order; ++n) {
        c[static_cast<size_t>(n)] = ladder * hyp2f1(q, z0);
        ladder *= q.a * q.b / (q.c * cx(double(n + 1)));
        q.a += 1.0;
        q.b += 1.0;
        q.c += 1.0;
    }
    return Jet(z0, std::move(c));
}

cx hypergeom_residual(const HypParams &p, const Jet &z_jet) {
    cx s = z_jet.base();
    cx z = z_jet.value();
    cx zp = z_jet.deriv(1);
    cx zpp = z_jet.deriv(2);
    return s * (cx(1.0) - s) * zpp + (p.c - (p.a + p.b + cx(1.0)) * s) * zp - p.a * p.b * z;
}

} // namespace chazylab
