#pragma once
// Radical solution of s^4 - 2s^3 - 4xs + 2x = 0 through its resolvent cubic,
// plus a generic numeric polynomial root finder used for cross-checks and for
// the catalogue's polynomial inversions.

#include <array>
#include <complex>
#include <vector>

namespace chazylab {

using cxd = std::complex<double>;

// Roots of (u + 3/2)(u^2 + 3/4) = (4x+1)^2:
// u = 2 w^j (x(2x+1))^{1/3} - 1/2 for the three cube roots of unity w^j.
std::array<cxd, 3> resolvent_cubic_roots(cxd x);

// Four roots of s^4 - 2s^3 - 4xs + 2x, assembled from the shifted quartic in
// xi = s - 1/2, the resolvent root u0, A = sqrt(u0 + 3/2) and the two
// quadratic factors; the degenerate case 4x+1 = 0 (A = 0) falls back to the
// biquadratic xi^4 - (3/2)xi^2 - 3/16 = 0.
std::array<cxd, 4> quartic_by_radicals(cxd x);

// Durand-Kerner iteration on a dense coefficient list (c[i] multiplies z^i);
// leading coefficient must be nonzero.
std::vector<cxd> poly_roots(const std::vector<cxd> &coeffs);

} // namespace chazylab
