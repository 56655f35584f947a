#pragma once
// Residual bookkeeping shared by the ODE checks: the raw sum of terms plus
// the sum of term magnitudes, so callers can judge cancellation-scaled size.

#include <cmath>
#include <complex>

namespace chazylab {

struct Residual {
    std::complex<double> value{0.0, 0.0};
    double scale = 0.0;

    void add(std::complex<double> term) {
        value += term;
        scale += std::abs(term);
    }
    double normalised() const { return scale > 0.0 ? std::abs(value) / scale : std::abs(value); }
    // For checks where all terms may vanish identically: the smaller of the
    // cancellation-scaled and the raw magnitude.
    double measure() const { return std::min(normalised(), std::abs(value)); }
};

} // namespace chazylab
