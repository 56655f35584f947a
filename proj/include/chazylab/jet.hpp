#pragma once
// Truncated Taylor series ("jets") over complex doubles.
//
// A Jet stores the expansion point of the independent variable and the
// Taylor coefficients c0..cK of one function there; the k-th derivative is
// k! * c[k]. All arithmetic is closed at fixed order. This is the derivative
// carrier for every residual check in the library.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chazylab {

using cx = std::complex<double>;

struct DivisionByZeroSeries : std::runtime_error {
    DivisionByZeroSeries() : std::runtime_error("jet division by series with zero constant term") {}
};
struct BranchPointError : std::runtime_error {
    BranchPointError() : std::runtime_error("log/pow/sqrt of a jet with zero constant term") {}
};
struct BaseMismatch : std::runtime_error {
    BaseMismatch() : std::runtime_error("jet composition: inner value does not match outer base") {}
};
struct NonInvertibleSeries : std::runtime_error {
    NonInvertibleSeries() : std::runtime_error("jet reversion: vanishing linear coefficient (critical point)") {}
};

// Deterministic branch choice for multivalued functions. log_branch shifts
// the principal logarithm by 2*pi*i*log_branch; pow and sqrt inherit it.
struct BranchSpec {
    int log_branch = 0;
};

class Jet {
public:
    Jet() : base_(0.0), c_(1, cx(0.0)) {}
    Jet(cx base, std::vector<cx> coeffs) : base_(base), c_(std::move(coeffs)) {
        if (c_.empty()) c_.assign(1, cx(0.0));
    }
    // constant function
    static Jet constant(cx value, cx base, int order) {
        std::vector<cx> c(static_cast<size_t>(order) + 1, cx(0.0));
        c[0] = value;
        return Jet(base, std::move(c));
    }
    // the identity function x at expansion point x0
    static Jet variable(cx x0, int order) {
        Jet j = constant(x0, x0, order);
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    cx base() const { return base_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    cx value() const { return c_[0]; }
    cx coeff(int k) const { return k <= order() ? c_[static_cast<size_t>(k)] : cx(0.0); }
    cx &coeff(int k) { return c_[static_cast<size_t>(k)]; }
    // k-th derivative value at the base point
    cx deriv(int k) const;

    Jet truncated(int new_order) const;
    // jet of f' (order drops by one)
    Jet derivative() const;
    // termwise antiderivative with value const0 at the base point
    Jet antiderivative(cx const0 = 0.0) const;

private:
    cx base_;
    std::vector<cx> c_;

    friend Jet operator+(const Jet &, const Jet &);
    friend Jet operator-(const Jet &, const Jet &);
    friend Jet operator*(const Jet &, const Jet &);
    friend Jet operator/(const Jet &, const Jet &);
    friend Jet operator-(const Jet &);
    friend Jet jet_compose(const Jet &, const Jet &);
    friend Jet jet_revert(const Jet &);
    friend Jet jet_exp(const Jet &);
    friend Jet jet_log(const Jet &, BranchSpec);
    friend Jet jet_sin(const Jet &);
    friend Jet jet_cos(const Jet &);
};

Jet operator+(const Jet &a, const Jet &b);
Jet operator-(const Jet &a, const Jet &b);
Jet operator*(const Jet &a, const Jet &b);
Jet operator/(const Jet &a, const Jet &b);
Jet operator-(const Jet &a);

Jet operator+(const Jet &a, cx s);
Jet operator+(cx s, const Jet &a);
Jet operator-(const Jet &a, cx s);
Jet operator-(cx s, const Jet &a);
Jet operator*(const Jet &a, cx s);
Jet operator*(cx s, const Jet &a);
Jet operator/(const Jet &a, cx s);
Jet operator/(cx s, const Jet &a);

Jet jet_exp(const Jet &a);
Jet jet_log(const Jet &a, BranchSpec branch = {});
Jet jet_pow(const Jet &a, double r, BranchSpec branch = {});
Jet jet_sqrt(const Jet &a, BranchSpec branch = {});
Jet jet_sin(const Jet &a);
Jet jet_cos(const Jet &a);
Jet jet_tan(const Jet &a);

// Taylor coefficients of outer(inner(.)); requires inner.value() == outer.base().
Jet jet_compose(const Jet &outer, const Jet &inner);
// Compositional inverse: b with jet_compose(a, b) = identity to the common order.
Jet jet_revert(const Jet &a);
// f as a function of g: given jets of f(p) and g(p) in a common parameter,
// return the jet of f(g^{-1}(.)) at g's value. Requires g'(p0) != 0.
Jet jet_reparam(const Jet &f_of_p, const Jet &g_of_p);

} // namespace chazylab
