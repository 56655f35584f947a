#pragma once
// Exact scan for the parameters that admit a Legendre-dual equation of the
// same fourth-order family, plus residual checks for that family and its
// dual form.

#include <vector>

#include "chazylab/jet.hpp"
#include "chazylab/polyq.hpp"
#include "chazylab/residual.hpp"

namespace chazylab {

struct DualityMatch {
    Rat l, m, j, n;
};

struct DualityScanResult {
    std::vector<DualityMatch> matches; // nondegenerate solutions, l and j nonzero
    std::vector<Rat> degenerate_l;     // roots filtered by the l != 0 / j != 0 preconditions
    PolyQ elimination;                 // the eliminant in l after removing m and n
};

// Match the coefficient vector of the transformed dual equation in (l, m)
// against the original family's vector in (j, n) and solve the resulting
// four-equation system exactly.
DualityScanResult duality_parameter_scan();

// m-values of the nondegenerate matches, deduplicated
std::vector<Rat> duality_m_values();

// The displayed quartic-term exponent is ambiguous between (f')^4 and
// (f'')^4; both readings are kept selectable.
enum class QuarticTermReading { FirstDerivative, SecondDerivative };

// f^3 f'''' - 2(l+2) f^2 f' f''' + 3(-12lm+l-1) f^2 (f'')^2
//   + 12(l^2 m + 6lm + 1) f (f')^2 f'' - (l^3 m + 12 l^2 m + 36lm + l + 6) X
// with X the chosen quartic term.
Residual fourth_order_residual(const Jet &f, double l, double m,
                               QuarticTermReading reading = QuarticTermReading::FirstDerivative);

// the same equation after f -> 1/h, d/dx -> (1/h) d/dt
Residual fourth_order_dual_residual(const Jet &h, double l, double m,
                                    QuarticTermReading reading = QuarticTermReading::FirstDerivative);

// Exact rational roots of a rational-coefficient polynomial, found by numeric
// localisation, continued-fraction reconstruction and exact verification;
// each confirmed root is deflated exactly.
std::vector<Rat> rational_roots(const PolyQ &p);

} // namespace chazylab
