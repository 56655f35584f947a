#include "chazylab/quartic.hpp"

#include <cmath>
#include <stdexcept>

namespace chazylab {

std::array<cxd, 3> resolvent_cubic_roots(cxd x) {
    cxd r = std::pow(x * (2.0 * x + 1.0), 1.0 / 3.0);
    cxd w(-0.5, std::sqrt(3.0) / 2.0);
    return {2.0 * r - 0.5, 2.0 * w * r - 0.5, 2.0 * w * w * r - 0.5};
}

namespace {

std::array<cxd, 2> quadratic_roots(cxd b, cxd c) {
    // z^2 + b z + c, with the numerically stable sibling root c/z1
    cxd d = std::sqrt(b * b - 4.0 * c);
    cxd z1 = (std::abs(-b + d) >= std::abs(-b - d)) ? (-b + d) / 2.0 : (-b - d) / 2.0;
    if (z1 == cxd(0.0)) return {cxd(0.0), -b};
    return {z1, c / z1};
}

} // namespace

std::array<cxd, 4> quartic_by_radicals(cxd x) {
    cxd p = 4.0 * x + 1.0;
    std::array<cxd, 4> xi;
    if (std::abs(p) < 1e-12) {
        // biquadratic: xi^4 - (3/2)xi^2 - 3/16 = 0
        auto q = quadratic_roots(-1.5, -3.0 / 16.0);
        cxd r0 = std::sqrt(q[0]), r1 = std::sqrt(q[1]);
        xi = {r0, -r0, r1, -r1};
    } else {
        cxd u0 = std::pow(8.0 * x * (2.0 * x + 1.0), 1.0 / 3.0) - 0.5;
        cxd A = std::sqrt(u0 + 1.5);
        auto q1 = quadratic_roots(-A, u0 / 2.0 - p / (2.0 * A));
        auto q2 = quadratic_roots(A, u0 / 2.0 + p / (2.0 * A));
        xi = {q1[0], q1[1], q2[0], q2[1]};
    }
    std::array<cxd, 4> s;
    for (int i = 0; i < 4; ++i) s[static_cast<size_t>(i)] = xi[static_cast<size_t>(i)] + 0.5;
    return s;
}

std::vector<cxd> poly_roots(const std::vector<cxd> &coeffs) {
    std::vector<cxd> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) throw std::invalid_argument("poly_roots: degree must be at least 1");
    int n = static_cast<int>(c.size()) - 1;
    cxd lead = c.back();
    for (auto &v : c) v /= lead;

    std::vector<cxd> z(static_cast<size_t>(n));
    // standard staggered initial guesses on a non-real ray
    cxd seed(0.4, 0.9);
    cxd acc = 1.0;
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        z[static_cast<size_t>(i)] = acc;
    }
    auto eval = [&](cxd v) {
        cxd r = 0.0;
        for (int i = n; i >= 0; --i) r = r * v + c[static_cast<size_t>(i)];
        return r;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            cxd denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            cxd step = eval(z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

} // namespace chazylab
