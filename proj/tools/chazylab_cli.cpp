// Command-line front end: verification runs over the curve catalogue, the
// radical quartic solver, and CSV/SVG sampling of a family.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "chazylab/curves.hpp"
#include "chazylab/duality.hpp"
#include "chazylab/quartic.hpp"

using namespace chazylab;

namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
    const char *env = std::getenv("CHAZY_LAB_LOG");
    if (!env) return LogLevel::Info;
    std::string v(env);
    if (v == "quiet") return LogLevel::Quiet;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Info;
}

void log_info(const std::string &msg) {
    if (log_level() >= LogLevel::Info) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string &msg) {
    if (log_level() >= LogLevel::Debug) std::cerr << "[debug] " << msg << "\n";
}

int emit(const std::string &text, const std::string &out) {
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return 1;
    }
    f << text;
    return 0;
}

VerificationReport appendix_a_report(const VerifyOptions &opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    rep.samples = 100;
    rep.order = opt.order;
    rep.tolerance = opt.tol;
    std::mt19937 rng(opt.seed + 17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst_cubic = 0.0, worst_quartic = 0.0, worst_match = 0.0;
    for (int i = 0; i < 100; ++i) {
        cxd x(u(rng), u(rng));
        cxd rhs = (4.0 * x + 1.0) * (4.0 * x + 1.0);
        for (cxd root : resolvent_cubic_roots(x)) {
            cxd lhs = (root + 1.5) * (root * root + 0.75);
            double scale =
                (std::abs(root) + 1.5) * (std::abs(root) * std::abs(root) + 0.75) + std::abs(rhs);
            worst_cubic = std::max(worst_cubic, std::abs(lhs - rhs) / scale);
        }
        auto radical = quartic_by_radicals(x);
        for (cxd s : radical) {
            cxd v = (s - 2.0) * s * s * s - 4.0 * x * s + 2.0 * x;
            double as = std::abs(s);
            double scale = as * as * as * as + 2.0 * as * as * as + 4.0 * std::abs(x) * as +
                           2.0 * std::abs(x) + 1.0;
            worst_quartic = std::max(worst_quartic, std::abs(v) / scale);
        }
        std::vector<cxd> numeric = poly_roots({2.0 * x, -4.0 * x, cxd(0.0), cxd(-2.0), cxd(1.0)});
        for (cxd s : radical) {
            double best = 1e300;
            for (cxd z : numeric) best = std::min(best, std::abs(z - s));
            worst_match = std::max(worst_match, best);
        }
    }
    rep.checks.push_back(
        {"appendixA", "resolvent-cubic", Rat(2), 100, worst_cubic, 1e-12, worst_cubic <= 1e-12});
    rep.checks.push_back(
        {"appendixA", "radical-quartic", Rat(2), 100, worst_quartic, 1e-9, worst_quartic <= 1e-9});
    rep.checks.push_back(
        {"appendixA", "numeric-oracle", Rat(2), 100, worst_match, 1e-9, worst_match <= 1e-9});
    return rep;
}

VerificationReport appendix_b_report(const VerifyOptions &opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    rep.samples = 1;
    rep.order = opt.order;
    rep.tolerance = 0.0;
    DualityScanResult res = duality_parameter_scan();
    std::vector<Rat> ms = duality_m_values();
    bool values_ok = ms.size() == 2 && ms[0] == Rat(9, 80) && ms[1] == Rat(16, 135);
    rep.checks.push_back({"appendixB", "parameter-values", Rat(0), 1, values_ok ? 0.0 : 1.0, 0.0,
                          values_ok});
    bool involutive = res.matches.size() == 2 && res.matches[0].m == res.matches[1].n &&
                      res.matches[0].n == res.matches[1].m;
    rep.checks.push_back(
        {"appendixB", "involutive-pair", Rat(0), 1, involutive ? 0.0 : 1.0, 0.0, involutive});
    bool exponents_ok = true;
    for (const auto &m : res.matches)
        if (m.j != Rat(7, 2) - m.l) exponents_ok = false;
    rep.checks.push_back(
        {"appendixB", "exponent-sum", Rat(0), 1, exponents_ok ? 0.0 : 1.0, 0.0, exponents_ok});
    return rep;
}

std::string csv_field(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string plot_csv(const CurveFamily &fam, int samples) {
    std::ostringstream out;
    out << "p_re,p_im,x_re,x_im,y_re,y_im\r\n";
    for (int j = 0; j < samples; ++j) {
        double th = 2.0 * M_PI * j / samples;
        cx p = fam.anchor + std::polar(0.6 * fam.radius, th);
        FamilyJets fj = eval_family(fam, p, 4);
        out << csv_field(p.real()) << ',' << csv_field(p.imag()) << ',' << csv_field(fj.x.value().real())
            << ',' << csv_field(fj.x.value().imag()) << ',' << csv_field(fj.y.value().real()) << ','
            << csv_field(fj.y.value().imag()) << "\r\n";
    }
    return out.str();
}

std::string plot_svg(const CurveFamily &fam, int samples) {
    std::vector<std::pair<double, double>> xs, ys;
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (int j = 0; j <= samples; ++j) {
        double th = 2.0 * M_PI * j / samples;
        cx p = fam.anchor + std::polar(0.6 * fam.radius, th);
        FamilyJets fj = eval_family(fam, p, 4);
        xs.push_back({fj.x.value().real(), fj.x.value().imag()});
        ys.push_back({fj.y.value().real(), fj.y.value().imag()});
        for (auto [a, b] : {xs.back(), ys.back()}) {
            lo_x = std::min(lo_x, a);
            hi_x = std::max(hi_x, a);
            lo_y = std::min(lo_y, b);
            hi_y = std::max(hi_y, b);
        }
    }
    double span_x = std::max(hi_x - lo_x, 1e-12), span_y = std::max(hi_y - lo_y, 1e-12);
    auto mapped = [&](std::pair<double, double> q) {
        double px = 20.0 + 560.0 * (q.first - lo_x) / span_x;
        double py = 580.0 - 560.0 * (q.second - lo_y) / span_y;
        std::ostringstream o;
        o << csv_field(px) << ',' << csv_field(py);
        return o.str();
    };
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    out << "  <title>" << fam.id << "</title>\n";
    for (int pass = 0; pass < 2; ++pass) {
        const auto &pts = pass == 0 ? xs : ys;
        out << "  <polyline fill=\"none\" stroke=\"" << (pass == 0 ? "#1f77b4" : "#d62728")
            << "\" stroke-width=\"1.5\" points=\"";
        for (size_t j = 0; j < pts.size(); ++j) out << (j ? " " : "") << mapped(pts[j]);
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"verification laboratory for closed-form solution families of a "
                 "generalised third-order ODE"};
    app.fallthrough();
    app.require_subcommand(1);

    double tol = 1e-8;
    int samples = 64;
    int order = 8;
    unsigned seed = 0;
    std::string format = "text";
    std::string out;
    app.add_option("--tol", tol, "residual tolerance")->capture_default_str();
    app.add_option("--samples", samples, "sample count per check")->capture_default_str();
    app.add_option("--order", order, "jet order, at least 7")->capture_default_str();
    app.add_option("--seed", seed, "sampling seed")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--out", out, "write output to this file instead of stdout");

    auto *verify = app.add_subcommand("verify", "run the verification checks for a target");
    std::string target = "all";
    verify->add_option("target", target,
                       "all, table1..table4, a family id, identities, appendixA, appendixB");

    auto *quartic = app.add_subcommand("quartic", "solve the parameter quartic by radicals");
    double qre = 0.0, qim = 0.0;
    quartic->add_option("re", qre, "real part of the parameter")->required();
    quartic->add_option("im", qim, "imaginary part of the parameter");

    auto *plot = app.add_subcommand("plot", "trace a family around its anchor");
    std::string plot_family;
    std::string kind = "csv";
    plot->add_option("family", plot_family, "catalogue family id")->required();
    plot->add_option("--kind", kind, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (order < 7) {
        std::cerr << "error: --order must be at least 7\n";
        return 2;
    }
    VerifyOptions opt{samples, order, seed, tol};

    try {
        if (verify->parsed()) {
            Catalogue cat = Catalogue::load();
            log_info("catalogue loaded with " + std::to_string(cat.families().size()) + " families");
            VerificationReport rep;
            rep.seed = seed;
            rep.samples = samples;
            rep.order = order;
            rep.tolerance = tol;
            if (target == "all") {
                rep = verify_all(cat, opt);
                rep.append(appendix_a_report(opt));
                rep.append(appendix_b_report(opt));
            } else if (target.size() == 6 && target.rfind("table", 0) == 0 && target[5] >= '1' &&
                       target[5] <= '4') {
                rep = verify_table(cat, target[5] - '0', opt);
            } else if (target == "identities") {
                rep = verify_identities(cat, opt);
                rep.append(verify_dualities(opt));
            } else if (target == "appendixA") {
                rep = appendix_a_report(opt);
            } else if (target == "appendixB") {
                rep = appendix_b_report(opt);
            } else if (const CurveFamily *fam = cat.find(target)) {
                rep = verify_family(cat, *fam, opt);
            } else {
                std::cerr << "error: unknown target '" << target << "'\n";
                return 2;
            }
            for (const auto &c : rep.checks)
                log_debug(c.family + "/" + c.name + " max=" + std::to_string(c.max_residual));
            std::string text = format == "structured" ? render_structured(rep) : render_text(rep);
            int rc = emit(text, out);
            if (rc != 0) return rc;
            return rep.all_pass() ? 0 : 1;
        }
        if (quartic->parsed()) {
            cxd x(qre, qim);
            auto roots = quartic_by_radicals(x);
            std::ostringstream o;
            if (format == "structured") {
                o << "{\"schema\":\"chazylab-quartic/1\",\"roots\":[";
                for (size_t j = 0; j < roots.size(); ++j)
                    o << (j ? "," : "") << "[" << csv_field(roots[j].real()) << ","
                      << csv_field(roots[j].imag()) << "]";
                o << "]}\n";
            } else {
                for (cxd r : roots)
                    o << csv_field(r.real()) << " " << csv_field(r.imag()) << "\n";
            }
            return emit(o.str(), out);
        }
        if (plot->parsed()) {
            Catalogue cat = Catalogue::load();
            const CurveFamily *fam = cat.find(plot_family);
            if (!fam) {
                std::cerr << "error: unknown family '" << plot_family << "'\n";
                return 2;
            }
            log_info("tracing " + fam->id);
            return emit(kind == "svg" ? plot_svg(*fam, samples) : plot_csv(*fam, samples), out);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
