#pragma once
// Gauss hypergeometric 2F1 on the complex plane.
//
// Strategy: terminating series are summed exactly; otherwise direct series
// for |z| <= 0.9, Pfaff transform z -> z/(z-1) when that argument is small
// enough. Anything else throws NoConvergence rather than silently continuing.

#include <stdexcept>

#include "chazylab/jet.hpp"

namespace chazylab {

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const char *what) : std::runtime_error(what) {}
};
struct PolarParameter : std::runtime_error {
    PolarParameter() : std::runtime_error("2F1: c is a non-positive integer and the series does not terminate first") {}
};

struct HypParams {
    cx a, b, c;
};

cx hyp2f1(const HypParams &p, cx z);

// Jet of z |-> 2F1(a,b;c;z) at z0, via the contiguous derivative ladder
// d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z).
Jet hyp2f1_jet(const HypParams &p, cx z0, int order);

// s(1-s) z'' + (c-(a+b+1)s) z' - ab z at the base point of z_jet
// (the jet's independent variable is s).
cx hypergeom_residual(const HypParams &p, const Jet &z_jet);

} // namespace chazylab
