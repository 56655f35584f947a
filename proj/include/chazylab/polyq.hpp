#pragma once
// Exact univariate / bivariate polynomials over Q and the Sylvester
// resultant with fraction-free (Bareiss) elimination.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "chazylab/rat.hpp"

namespace chazylab {

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("resultant of a zero or degree-0 polynomial") {}
};

// dense univariate polynomial, coefficient of x^i at c[i]
struct PolyQ {
    std::vector<Rat> c;

    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs) : c(std::move(coeffs)) { strip(); }
    static PolyQ constant(Rat v) { return PolyQ({std::move(v)}); }

    void strip();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rat coeff(int i) const { return i >= 0 && i <= degree() ? c[static_cast<size_t>(i)] : Rat(0); }
    std::complex<double> eval(std::complex<double> x) const;
};

PolyQ operator+(const PolyQ &a, const PolyQ &b);
PolyQ operator-(const PolyQ &a, const PolyQ &b);
PolyQ operator*(const PolyQ &a, const PolyQ &b);
bool operator==(const PolyQ &a, const PolyQ &b);
// exact division; throws if the division leaves a remainder
PolyQ exact_div(const PolyQ &a, const PolyQ &b);

// bivariate polynomial, coefficient of x^i y^j at m[i][j]
struct PolyQ2 {
    std::vector<std::vector<Rat>> m;

    PolyQ2() = default;
    static PolyQ2 constant(Rat v);
    static PolyQ2 var_x();
    static PolyQ2 var_y();

    void strip();
    bool is_zero() const;
    int deg_x() const { return static_cast<int>(m.size()) - 1; }
    int deg_y() const;
    Rat coeff(int i, int j) const;
    void set_coeff(int i, int j, Rat v);
    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const;
    // sum of |monomial| magnitudes at (x,y), for normalised vanishing checks
    double eval_scale(std::complex<double> x, std::complex<double> y) const;
};

PolyQ2 operator+(const PolyQ2 &a, const PolyQ2 &b);
PolyQ2 operator-(const PolyQ2 &a, const PolyQ2 &b);
PolyQ2 operator*(const PolyQ2 &a, const PolyQ2 &b);
PolyQ2 operator*(const PolyQ2 &a, const Rat &s);
bool operator==(const PolyQ2 &a, const PolyQ2 &b);
PolyQ2 exact_div(const PolyQ2 &a, const PolyQ2 &b);

// polynomial in the elimination variable s with PolyQ2 coefficients
struct PolyS {
    std::vector<PolyQ2> c; // coefficient of s^i at c[i]

    void strip();
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

// Sylvester resultant eliminating s, computed by Bareiss fraction-free
// elimination over Q[x,y].
PolyQ2 resultant(const PolyS &p, const PolyS &q);

// Canonical form "up to unit rational scalar": divide by content and make the
// lexicographically-leading (highest x, then y) coefficient positive.
PolyQ2 canonicalize(const PolyQ2 &p);
// Sparse canonical printing: monomials sorted by total degree, then x-degree,
// descending; reduced rational coefficients.
std::string to_canonical_string(const PolyQ2 &p, const std::string &xname, const std::string &yname);

// reverse the x-variable: x^n * p(1/x, y) with n = deg_x(p)
PolyQ2 reverse_x(const PolyQ2 &p);

} // namespace chazylab
