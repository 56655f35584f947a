#include "chazylab/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace chazylab {

bool VerificationReport::all_pass() const {
    for (const auto &c : checks)
        if (!c.pass) return false;
    return true;
}

void VerificationReport::append(const VerificationReport &other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

std::string fmt_residual(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6e", v);
    return buf;
}

} // namespace

std::string render_text(const VerificationReport &rep) {
    std::ostringstream out;
    out << "config seed=" << rep.seed << " samples=" << rep.samples << " order=" << rep.order
        << " tol=" << fmt_residual(rep.tolerance) << "\n";
    int failed = 0;
    for (const auto &c : rep.checks) {
        out << "check family=" << c.family << " name=" << c.name << " k=" << rat_str(c.k)
            << " samples=" << c.samples << " max=" << fmt_residual(c.max_residual)
            << " tol=" << fmt_residual(c.tolerance) << (c.pass ? " PASS" : " FAIL") << "\n";
        if (!c.pass) ++failed;
    }
    out << "summary checks=" << rep.checks.size() << " failed=" << failed
        << (failed == 0 ? " PASS" : " FAIL") << "\n";
    return out.str();
}

std::string render_structured(const VerificationReport &rep) {
    nlohmann::ordered_json doc;
    doc["schema"] = "chazylab-report/1";
    doc["seed"] = rep.seed;
    doc["samples"] = rep.samples;
    doc["order"] = rep.order;
    doc["tolerance"] = rep.tolerance;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto &c : rep.checks) {
        nlohmann::ordered_json rec;
        rec["family"] = c.family;
        rec["check-name"] = c.name;
        rec["k"] = rat_str(c.k);
        rec["samples"] = c.samples;
        rec["max-normalised-residual"] = c.max_residual;
        rec["tolerance"] = c.tolerance;
        rec["pass"] = c.pass;
        doc["checks"].push_back(rec);
    }
    doc["pass"] = rep.all_pass();
    return doc.dump(2) + "\n";
}

} // namespace chazylab
