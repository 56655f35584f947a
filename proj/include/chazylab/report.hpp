#pragma once
// Result records for the verification runs and their two renderings. The
// structured rendering is versioned and byte-stable for a fixed configuration.

#include <string>
#include <vector>

#include "chazylab/rat.hpp"

namespace chazylab {

struct CheckResult {
    std::string family;
    std::string name;
    Rat k;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    unsigned seed = 0;
    int samples = 0;
    int order = 0;
    double tolerance = 0.0;

    bool all_pass() const;
    void append(const VerificationReport &other);
};

std::string render_text(const VerificationReport &rep);
std::string render_structured(const VerificationReport &rep);

} // namespace chazylab
