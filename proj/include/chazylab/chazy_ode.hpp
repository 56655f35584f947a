#pragma once
// Residual kernels for the third-order family and its relatives, the Mobius
// action on solutions, weighted transforms, Legendre duality and the closed
// general solutions for k=2 and k=3.

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chazylab/jet.hpp"
#include "chazylab/residual.hpp"

namespace chazylab {

struct PoleOfAction : std::runtime_error {
    PoleOfAction() : std::runtime_error("Mobius action evaluated at a pole of c*x+d") {}
};
struct DegenerateDual : std::runtime_error {
    DegenerateDual() : std::runtime_error("Legendre dual undefined: second derivative vanishes") {}
};
struct CoincidentPoles : std::runtime_error {
    CoincidentPoles() : std::runtime_error("pole locations must be pairwise distinct") {}
};
struct ConstraintViolated : std::runtime_error {
    ConstraintViolated() : std::runtime_error("quartic coefficients violate 12ae - 3bd + c^2 = 0") {}
};
struct MultipleRoots : std::runtime_error {
    MultipleRoots() : std::runtime_error("quartic has a (near-)multiple root") {}
};

struct Mobius {
    cx a, b, c, d; // determinant 1
    cx apply(cx x) const { return (a * x + b) / (c * x + d); }
};

struct QuarticCoeffs {
    cx a, b, c, d, e; // a t^4 + b t^3 + c t^2 + d t + e
};

// a solution presented as "jet of y at x, to the requested order"
using JetFn = std::function<Jet(cx, int)>;

// y''' - 2 y'' y + 3 (y')^2 - (4/(36-k^2)) (6 y' - y^2)^2
Residual chazy_residual(double k, const Jet &y);

// f f'''' - (k-2) f' f''' + (3k(k-2)/(2(k+6))) (f'')^2
Residual intc_residual(double k, const Jet &f);

// 10 F6 (F2)^3 - 80 (F2)^2 F3 F5 - 51 (F2)^2 (F4)^2 + 336 F2 (F3)^2 F4 - 224 (F3)^4
Residual ode6_residual(const Jet &F);

// The same kernel read off one derivative apart: the 7th-order form consumes
// derivatives 3..7 of its argument, the 6th-order form derivatives 2..6.
enum class NothForm { SeventhOrder, SixthOrder };
Residual noth_residual(const Jet &j, NothForm form);

// y~(x) = (cx+d)^{-2} y(g.x) - 6c/(cx+d)
Jet sl2_apply(const Mobius &g, const JetFn &y, cx x, int order);

// F~(x) = (cx+d)^{-weight} F(g.x)
Jet weight_transform(const Mobius &g, const JetFn &F, double weight, cx x, int order,
                     BranchSpec branch = {});

// (x, F) -> (t, H) = (F', xF' - F). Inputs are jets in a common parameter;
// the returned pair is (identity jet in t, jet of H(t)).
std::pair<Jet, Jet> legendre_dual(const Jet &x_jet, const Jet &F_jet);

// y = -2 sum 1/(x - xi); two or three finite poles
JetFn general_solution_k2(const std::vector<cx> &poles);

// y = -(3/2) sum 1/(t - ti) over the roots of the quartic, subject to the
// admissibility constraint 12ae - 3bd + c^2 = 0
JetFn general_solution_k3(const QuarticCoeffs &q);

// Power-series solution of the third-order equation from initial data
// (y, y', y'') at x0; used to sample generic solutions.
Jet chazy_series_solution(double k, cx x0, cx y0, cx y1, cx y2, int order);

} // namespace chazylab
