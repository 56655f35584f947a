#pragma once
// Schwarz triangle functions: angle bookkeeping, the hypergeometric triangle
// map x(s) and its Newton inversion, the Omega logarithmic derivatives, and
// the recipes that turn a Schwarz function into generalised Chazy solutions.

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chazylab/hyp2f1.hpp"
#include "chazylab/jet.hpp"
#include "chazylab/rat.hpp"
#include "chazylab/residual.hpp"

namespace chazylab {

struct SingularPoint : std::runtime_error {
    SingularPoint() : std::runtime_error("evaluation at a singular point s in {0, 1}") {}
};
struct CriticalPoint : std::runtime_error {
    CriticalPoint() : std::runtime_error("vanishing s' at the expansion point") {}
};
struct DegenerateC : std::runtime_error {
    DegenerateC() : std::runtime_error("hypergeometric quotient degenerates for integer c") {}
};

struct TriangleAngles {
    Rat alpha, beta, gamma;
};

struct AbcParams {
    Rat a, b, c;
};

// (a, b, c) = ((1-alpha-beta-gamma)/2, (1+alpha-beta-gamma)/2, 1-beta)
AbcParams angles_to_abc(const TriangleAngles &t);
HypParams to_hyp_params(const AbcParams &p);

// V(s) = (1-beta^2)/s^2 + (1-gamma^2)/(s-1)^2 + (beta^2+gamma^2-alpha^2-1)/(s(s-1))
cx potential(const TriangleAngles &t, cx s);

// value of {s,x} = s'''/s' - (3/2)(s''/s')^2 at the base point; order >= 3
cx schwarzian(const Jet &s_jet);

// {s,x} + (1/2)(s')^2 V(s), accumulated term by term
Residual schwarz_residual(const TriangleAngles &t, const Jet &s_jet);

// x(s) = s^{1-c} 2F1(a-c+1,b-c+1;2-c;s) / 2F1(a,b;c;s) as a jet in s
Jet triangle_map_jet(const TriangleAngles &t, cx s, int order);
cx triangle_map(const TriangleAngles &t, cx s);

// Newton iteration from the seed; throws NoConvergence when the target is
// too far (walk a homotopy path from a known anchor in that case)
cx invert_triangle_map(const TriangleAngles &t, cx x, cx seed);

// Omega_1 = -(1/2) d/dx log(s'/(s(s-1))), Omega_2 with s-1, Omega_3 with s
std::array<Jet, 3> omegas(const Jet &s_jet);

struct Recipe {
    int c1, c2, c3;
};

// y = c1 Omega_1 + c2 Omega_2 + c3 Omega_3
Jet chazy_from_schwarz(const Recipe &r, const Jet &s_jet);

// (a, b) with y = d/dx log[(s')^3 / (s^a (s-1)^b)]:
// a = -(c1+c3)/2, b = -(c1+c2)/2
std::pair<Rat, Rat> recipe_exponents(const Recipe &r);
Jet chazy_from_exponents(double a, double b, const Jet &s_jet);

struct RecipeEntry {
    TriangleAngles angles;
    Recipe recipe;
    Rat k;
};

// every (angle pattern, recipe, k) combination for k in {2/3, 3/2, 2, 3},
// with cyclic permutations applied to angles and coefficients together
std::vector<RecipeEntry> recipe_table();

// series solution of {s,x} + (1/2)(s')^2 V(s) = 0 from initial data
// s(x0) = s0, s'(x0) = s1, s''(x0) = s2; requires s1 != 0 and s0 not in {0,1}
Jet schwarz_series_solution(const TriangleAngles &t, cx x0, cx s0, cx s1, cx s2, int order);

} // namespace chazylab
