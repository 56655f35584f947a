#include "chazylab/curves.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "chazylab/quartic.hpp"

namespace chazylab {

namespace {

double rd(const Rat &r) {
    return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Rat parse_rat(const std::string &tok) {
    size_t slash = tok.find('/');
    if (slash == std::string::npos) return Rat(BigInt(tok));
    return Rat(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)));
}

std::vector<std::string> split_ws(const std::string &s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

unsigned fnv1a(const std::string &s) {
    unsigned h = 2166136261u;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 16777619u;
    }
    return h;
}

cx sample_disc(std::mt19937 &rng, cx anchor, double radius, const std::vector<cx> &avoid) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double guard = radius;
    for (cx a : avoid) guard = std::min(guard, 0.45 * std::abs(anchor - a));
    for (int tries = 0; tries < 256; ++tries) {
        double rad = radius * (0.30 + 0.70 * u(rng));
        double th = 2.0 * M_PI * u(rng);
        cx p = anchor + std::polar(rad, th);
        bool ok = true;
        for (cx a : avoid)
            if (std::abs(p - a) < guard) ok = false;
        if (ok) return p;
    }
    return anchor;
}

double rel(cx got, cx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

cx eval_point(const std::string &expr, const std::map<std::string, cx> &vars) {
    std::map<std::string, Jet> jets;
    for (const auto &[name, v] : vars) jets.emplace(name, Jet::constant(v, 0.0, 0));
    return eval_expr(expr, jets).value();
}

// max-residual accumulator keyed by check name
struct Accum {
    std::map<std::string, std::pair<double, int>> worst;
    void note(const std::string &name, double r) {
        auto &e = worst[name];
        e.first = std::max(e.first, r);
        e.second += 1;
    }
};

double check_tolerance(const std::string &name, double base) {
    if (name.size() >= 10 && name.rfind("involution") == name.size() - 10) return 1e-9;
    if (name == "oct-cubic-surface" || name == "lmn-curve-cubic") return 1e-10;
    if (name.find("planar-curve") != std::string::npos) return 1e-9;
    if (name == "quotient-inversion") return 1e-9;
    return base;
}

void flush_accum(VerificationReport &rep, const Accum &acc, const std::string &family, Rat k,
                 double base_tol) {
    for (const auto &[name, e] : acc.worst) {
        CheckResult c;
        c.family = family;
        c.name = name;
        c.k = k;
        c.samples = e.second;
        c.max_residual = e.first;
        c.tolerance = check_tolerance(name, base_tol);
        c.pass = std::isfinite(e.first) && e.first <= c.tolerance;
        rep.checks.push_back(c);
    }
}

VerificationReport make_report(const VerifyOptions &opt) {
    VerificationReport rep;
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    rep.order = opt.order;
    rep.tolerance = opt.tol;
    return rep;
}

// 27x^3(2x+1)^3 y^4 + 216x^2(2x+1)^2(4x+1) y^3 + 144x(2x+1)(70x^2+35x+4) y^2
//   + 256(10x+1)(5x+2)(4x+1) y + 192(250x^2+125x+16)
double planar_curve_s333(cx x, cx y) {
    cx u = 2.0 * x + 1.0;
    cx t1 = 27.0 * x * x * x * u * u * u * y * y * y * y;
    cx t2 = 216.0 * x * x * u * u * (4.0 * x + 1.0) * y * y * y;
    cx t3 = 144.0 * x * u * (70.0 * x * x + 35.0 * x + 4.0) * y * y;
    cx t4 = 256.0 * (10.0 * x + 1.0) * (5.0 * x + 2.0) * (4.0 * x + 1.0) * y;
    cx t5 = 192.0 * (250.0 * x * x + 125.0 * x + 16.0);
    double scale = std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4) + std::abs(t5) + 1.0;
    return std::abs(t1 + t2 + t3 + t4 + t5) / scale;
}

// (2t-3)^2(4t^2+6t+9)^2 y^3 + 18t(2t-3)(2t^3-27)(4t^2+6t+9) y^2
//   + 324t^2(t^6-45t^3+243) y - 1458t^3(5t^3-108), written in the reciprocal
//   of the curve parameter
double planar_curve_oct(cx t, cx y) {
    cx a = 2.0 * t - 3.0;
    cx b = 4.0 * t * t + 6.0 * t + 9.0;
    cx t3 = t * t * t;
    cx t6 = t3 * t3;
    cx m1 = a * a * b * b * y * y * y;
    cx m2 = 18.0 * t * a * (2.0 * t3 - 27.0) * b * y * y;
    cx m3 = 324.0 * t * t * (t6 - 45.0 * t3 + 243.0) * y;
    cx m4 = -1458.0 * t3 * (5.0 * t3 - 108.0);
    double scale = std::abs(m1) + std::abs(m2) + std::abs(m3) + std::abs(m4) + 1.0;
    return std::abs(m1 + m2 + m3 + m4) / scale;
}

} // namespace

int CurveFamily::table() const {
    if (id.size() >= 2 && id[0] == 't') return id[1] - '0';
    return 0;
}

std::string Catalogue::default_path() { return std::string(CHAZYLAB_DATA_DIR) + "/catalogue.txt"; }

Catalogue Catalogue::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw CatalogueError("cannot open " + path);
    Catalogue cat;
    CurveFamily cur;
    bool open = false;
    auto flush = [&] {
        if (open) cat.families_.push_back(cur);
    };
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw CatalogueError("malformed header at line " + std::to_string(lineno));
            flush();
            cur = CurveFamily{};
            cur.id = line.substr(1, line.size() - 2);
            open = true;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos || !open)
            throw CatalogueError("malformed line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "k") {
            cur.k = parse_rat(value);
        } else if (key == "angles") {
            auto toks = split_ws(value);
            if (toks.size() != 3) throw CatalogueError(cur.id + ": angles needs three entries");
            cur.angles = {parse_rat(toks[0]), parse_rat(toks[1]), parse_rat(toks[2])};
        } else if (key == "param") {
            cur.param = value;
        } else if (key == "s_from_param") {
            cur.s_from_param = value;
        } else if (key == "x") {
            cur.x_expr = value;
        } else if (key == "y") {
            cur.y_expr = value;
        } else if (key == "y_of_x") {
            cur.y_of_x = value;
        } else if (key == "y2_of_x") {
            cur.y2_of_x = value;
        } else if (key == "F") {
            cur.F_expr = value;
        } else if (key == "H") {
            cur.H_expr = value;
        } else if (key == "exponents") {
            auto toks = split_ws(value);
            if (toks.size() != 2) throw CatalogueError(cur.id + ": exponents needs two entries");
            cur.exp_a = parse_rat(toks[0]);
            cur.exp_b = parse_rat(toks[1]);
        } else if (key == "exponents2") {
            auto toks = split_ws(value);
            if (toks.size() != 2) throw CatalogueError(cur.id + ": exponents2 needs two entries");
            cur.has_second_exponents = true;
            cur.exp2_a = parse_rat(toks[0]);
            cur.exp2_b = parse_rat(toks[1]);
        } else if (key == "implicit") {
            size_t mid = value.find('=');
            if (mid == std::string::npos) throw CatalogueError(cur.id + ": implicit needs lhs = rhs");
            cur.implicit_lhs = trim(value.substr(0, mid));
            cur.implicit_rhs = trim(value.substr(mid + 1));
        } else if (key == "same_as") {
            cur.same_as = value;
        } else if (key == "arg_scale") {
            cur.arg_scale = value;
        } else if (key == "outer_s") {
            cur.outer_s = value;
        } else if (key == "invertible") {
            cur.invertible = (value == "yes");
        } else if (key == "anchor") {
            auto toks = split_ws(value);
            if (toks.size() != 2) throw CatalogueError(cur.id + ": anchor needs two entries");
            cur.anchor = cx(std::stod(toks[0]), std::stod(toks[1]));
        } else if (key == "radius") {
            cur.radius = std::stod(value);
        } else if (key == "avoid") {
            for (const auto &tok : split_ws(value)) cur.avoid.push_back(cx(rd(parse_rat(tok)), 0.0));
        } else {
            throw CatalogueError(cur.id + ": unknown key '" + key + "'");
        }
    }
    flush();
    if (cat.families_.empty()) throw CatalogueError("no records in " + path);
    return cat;
}

const CurveFamily *Catalogue::find(const std::string &id) const {
    for (const auto &f : families_)
        if (f.id == id) return &f;
    return nullptr;
}

const CurveFamily &Catalogue::at(const std::string &id) const {
    const CurveFamily *f = find(id);
    if (!f) throw CatalogueError("no family '" + id + "'");
    return *f;
}

FamilyJets eval_family(const CurveFamily &fam, cx p, int order) {
    FamilyJets fj;
    fj.param = Jet::variable(p, order);
    fj.vars.emplace(fam.param, fj.param);
    fj.s = eval_expr(fam.s_from_param, fj.vars);
    fj.vars.insert_or_assign("s", fj.s);
    fj.x = (fam.x_expr == "hyp") ? triangle_map_jet(fam.angles, p, order)
                                 : eval_expr(fam.x_expr, fj.vars);
    fj.s_of_x = jet_reparam(fj.s, fj.x);
    fj.y = chazy_from_exponents(rd(fam.exp_a), rd(fam.exp_b), fj.s_of_x);
    return fj;
}

VerificationReport verify_family(const Catalogue &cat, const CurveFamily &fam,
                                 const VerifyOptions &opt) {
    VerificationReport rep = make_report(opt);
    std::mt19937 rng(opt.seed ^ fnv1a(fam.id));
    Accum acc;
    const int inversion_budget = 8;
    const cx w = std::exp(cx(0.0, 2.0 * M_PI / 3.0));
    for (int i = 0; i < opt.samples; ++i) {
        cx p = sample_disc(rng, fam.anchor, fam.radius, fam.avoid);
        try {
            FamilyJets fj = eval_family(fam, p, opt.order);
            acc.note("triangle-ode", schwarz_residual(fam.angles, fj.s_of_x).measure());
            acc.note("third-order-ode", chazy_residual(rd(fam.k), fj.y).measure());
            std::map<std::string, cx> pt{{fam.param, p},
                                         {"s", fj.s.value()},
                                         {"x", fj.x.value()}};
            if (!fam.y_of_x.empty())
                acc.note("closed-form-y", rel(fj.y.value(), eval_point(fam.y_of_x, pt)));
            if (!fam.y_expr.empty())
                acc.note("parametric-y", rel(fj.y.value(), eval_point(fam.y_expr, pt)));
            if (fam.has_second_exponents) {
                Jet y2 = chazy_from_exponents(rd(fam.exp2_a), rd(fam.exp2_b), fj.s_of_x);
                acc.note("third-order-ode-second", chazy_residual(rd(fam.k), y2).measure());
                if (!fam.y2_of_x.empty())
                    acc.note("closed-form-second", rel(y2.value(), eval_point(fam.y2_of_x, pt)));
            }
            if (!fam.implicit_lhs.empty()) {
                cx L = eval_point(fam.implicit_lhs, pt);
                cx R = eval_point(fam.implicit_rhs, pt);
                acc.note("implicit-relation", std::abs(L - R) / (std::abs(L) + std::abs(R) + 1.0));
            }
            if (!fam.F_expr.empty()) {
                Jet F_of_x = jet_reparam(eval_expr(fam.F_expr, fj.vars), fj.x);
                acc.note("sixth-order-ode", ode6_residual(F_of_x).measure());
            }
            if (!fam.H_expr.empty()) {
                Jet H_of_t = jet_reparam(eval_expr(fam.H_expr, fj.vars), fj.x);
                acc.note("dual-form", noth_residual(H_of_t, NothForm::SixthOrder).measure());
            }
            if (fam.invertible && i < inversion_budget) {
                cx seed = fj.s.value() * (1.0 + cx(0.01, 0.005));
                cx back = invert_triangle_map(fam.angles, fj.x.value(), seed);
                acc.note("quotient-inversion", rel(back, fj.s.value()));
            }
            if (!fam.same_as.empty()) {
                const CurveFamily &outer = cat.at(fam.same_as);
                std::map<std::string, cx> sp{{"s", fj.s.value()}};
                cx scale = eval_point(fam.arg_scale, sp);
                cx o = eval_point(fam.outer_s, sp);
                cx t_out = triangle_map(outer.angles, o);
                cx t_in = fj.x.value();
                double best = 1e300;
                cx wj = 1.0;
                for (int j = 0; j < 3; ++j, wj *= w)
                    best = std::min(best, std::abs(t_out / (scale * t_in * wj) - 1.0));
                acc.note("argument-scaling", best);
            }
        } catch (const std::exception &) {
            acc.note("evaluation", 1e300);
        }
    }
    flush_accum(rep, acc, fam.id, fam.k, opt.tol);
    return rep;
}

VerificationReport verify_table(const Catalogue &cat, int table, const VerifyOptions &opt) {
    VerificationReport rep = make_report(opt);
    bool any = false;
    for (const auto &fam : cat.families())
        if (fam.table() == table) {
            rep.append(verify_family(cat, fam, opt));
            any = true;
        }
    if (!any) throw CatalogueError("no families in table " + std::to_string(table));
    return rep;
}

VerificationReport verify_identities(const Catalogue &cat, const VerifyOptions &opt) {
    VerificationReport rep = make_report(opt);
    std::mt19937 rng(opt.seed ^ 0x9e3779b9u);
    const int n = std::max(32, opt.samples / 2);
    const cx w = std::exp(cx(0.0, 2.0 * M_PI / 3.0));
    Accum acc;

    auto curve_relation = [](cx s, cx t) {
        cx t3 = t * t * t;
        cx L = 512.0 * s * std::pow(27.0 * t3 - 8.0, 3);
        cx R = t3 * std::pow(27.0 * t3 + 64.0, 3) * std::pow(4.0 * s - 1.0, 3);
        return std::abs(L - R) / (std::abs(L) + std::abs(R) + 1.0);
    };

    // the planar relation along its own hypergeometric parametrisation
    {
        const CurveFamily &fam = cat.at("t3r4");
        for (int i = 0; i < n; ++i) {
            cx s = sample_disc(rng, fam.anchor, fam.radius, fam.avoid);
            acc.note("curve-on-parametrisation", curve_relation(s, triangle_map(fam.angles, s)));
        }
    }

    // the same relation under the cubic algebraic substitution, no
    // hypergeometrics involved
    for (int i = 0; i < n; ++i) {
        cx sig = sample_disc(rng, cx(0.45, 0.25), 0.18, {cx(0.0), cx(1.0)});
        cx c13 = std::pow(sig, 1.0 / 3.0);
        cx t = -4.0 * c13 / (sig + 2.0);
        cx s = -(1.0 / 64.0) * sig * std::pow(sig + 8.0, 3) / std::pow(1.0 - sig, 3);
        acc.note("curve-substitution", curve_relation(s, t));
    }

    // one cubic parametrisation carrying solutions for two parameter values
    for (int i = 0; i < n; ++i) {
        cx sig = sample_disc(rng, cx(0.45, 0.25), 0.18, {cx(0.0), cx(1.0)});
        Jet S = Jet::variable(sig, opt.order);
        Jet c13 = jet_pow(S, 1.0 / 3.0);
        Jet t = c13 / (S + 2.0);
        Jet y3p = (-1.5) * (S + 2.0) * (S * S * S + 6.0 * S * S - 96.0 * S + 8.0) /
                  (c13 * (S + 8.0) * (S - 1.0) * (S - 1.0));
        Jet y3 = jet_reparam(y3p, t);
        acc.note("shared-curve-k3", chazy_residual(3.0, y3).measure());
        cx tv = t.value();
        cx t3 = tv * tv * tv;
        acc.note("shared-curve-k3-closed",
                 rel(y3.value(), -(3.0 / (2.0 * tv)) * (1.0 - 108.0 * t3) / (1.0 - 27.0 * t3)));
        Jet y32p = 1.5 * y3p + 18.0 / (t * (S + 8.0));
        Jet y32 = jet_reparam(y32p, t);
        acc.note("shared-curve-k32", chazy_residual(1.5, y32).measure());
        cx y32c = -(9.0 / 4.0) * (sig + 2.0) * (sig - 10.0) * c13.value() * c13.value() /
                  ((sig - 1.0) * (sig - 1.0));
        acc.note("shared-curve-k32-closed", rel(y32.value(), y32c));
    }

    // constancy of the four transfer constants between the rescaled families
    auto phi_value = [&](const CurveFamily &fam, cx s) {
        Jet t = triangle_map_jet(fam.angles, s, 2);
        cx inv = 1.0 / t.deriv(1);
        return inv * inv * inv / (std::pow(s, rd(fam.exp_a)) * std::pow(s - 1.0, rd(fam.exp_b)));
    };
    const std::pair<const char *, const char *> transfers[] = {
        {"t3r1", "transfer-constant-c1"},
        {"t3r6", "transfer-constant-c2"},
        {"t4r1", "transfer-constant-c3"},
        {"t4r3", "transfer-constant-c4"},
    };
    for (const auto &[inner_id, label] : transfers) {
        const CurveFamily &inner = cat.at(inner_id);
        const CurveFamily &outer = cat.at(inner.same_as);
        cx ref = 0.0;
        bool have_ref = false;
        for (int i = 0; i < n; ++i) {
            cx s = sample_disc(rng, inner.anchor, inner.radius, inner.avoid);
            cx o = eval_point(inner.outer_s, {{"s", s}});
            cx ratio = phi_value(outer, o) / phi_value(inner, s);
            if (!have_ref) {
                ref = ratio;
                have_ref = true;
                acc.note(label, 0.0);
                continue;
            }
            double best = 1e300;
            cx u = 1.0;
            for (int j = 0; j < 3; ++j, u *= w) {
                best = std::min(best, std::abs(ratio / (ref * u) - 1.0));
                best = std::min(best, std::abs(ratio / (ref * u) + 1.0));
            }
            acc.note(label, best);
        }
    }

    // self-similar reduction: a root of the cubic in lambda sends the
    // hypergeometric map back onto the algebraic parametrisation
    {
        const CurveFamily &lfam = cat.at("t4r2");
        for (int i = 0; i < n; ++i) {
            cx tau = sample_disc(rng, cx(0.06, 0.02), 0.04, {cx(0.0)});
            cx t13 = std::pow(tau, 1.0 / 3.0);
            cx g = (4.0 / 3.0) * t13 * (1.0 - tau) / (1.0 + 8.0 * tau);
            std::vector<cxd> roots = poly_roots({-g, cxd(-1.0), cxd(0.0), 4.0 * g});
            cx target = 16.0 * t13 * t13 / (9.0 * (1.0 + 2.0 * tau));
            double best = 1e300;
            for (cxd lam : roots) {
                try {
                    cx mapped = triangle_map(lfam.angles, lam * lam * lam);
                    cx u = 1.0;
                    for (int j = 0; j < 3; ++j, u *= w)
                        best = std::min(best, std::abs(mapped / (u * target) - 1.0));
                } catch (const std::exception &) {
                    // roots outside the hypergeometric domain carry the other
                    // branches of the reduction
                }
            }
            acc.note("self-similar-cubic", best);
        }
    }

    // one dihedral parametrisation carrying paired solutions for k=2 and
    // k=2/3, differing by the logarithmic derivative of s-1
    {
        const CurveFamily &fam = cat.at("t2r3");
        for (int i = 0; i < n; ++i) {
            cx r = sample_disc(rng, fam.anchor, fam.radius, fam.avoid);
            FamilyJets fj = eval_family(fam, r, opt.order);
            acc.note("pair-k23", chazy_residual(2.0 / 3.0, fj.y).measure());
            Jet y2 = chazy_from_exponents(2.0, 2.5, fj.s_of_x);
            acc.note("pair-k2", chazy_residual(2.0, y2).measure());
            cx shift = fj.s_of_x.deriv(1) / (fj.s_of_x.value() - 1.0);
            acc.note("pair-shift", rel(fj.y.value(), y2.value() + shift));
            cx q = std::pow((1.0 - r) / (1.0 + r), 2.0 / 3.0);
            cx y2c = -(3.0 / (4.0 * std::pow(2.0, 2.0 / 3.0))) * q * (1.0 / r) * (3.0 * r - 1.0) *
                     (9.0 * r * r * r + 15.0 * r * r + 7.0 * r + 1.0);
            cx y23c = -(3.0 / std::pow(2.0, 2.0 / 3.0)) * q * (3.0 * r - 1.0) *
                      (3.0 * r * r + 5.0 * r + 2.0);
            acc.note("pair-closed-k2", rel(y2.value(), y2c));
            acc.note("pair-closed-k23", rel(fj.y.value(), y23c));
        }
    }

    // exponent deformations on the equilateral family switch k from 3 to 3/2
    {
        const CurveFamily &fam = cat.at("t3r1");
        for (int i = 0; i < n; ++i) {
            cx s = sample_disc(rng, fam.anchor, fam.radius, fam.avoid);
            FamilyJets fj = eval_family(fam, s, opt.order);
            acc.note("deformed-base-k3", chazy_residual(3.0, fj.y).measure());
            acc.note("deformed-pair-a",
                     chazy_residual(1.5, chazy_from_exponents(2.5, 1.0, fj.s_of_x)).measure());
            acc.note("deformed-pair-b",
                     chazy_residual(1.5, chazy_from_exponents(1.0, 2.5, fj.s_of_x)).measure());
            acc.note("deformed-pair-c",
                     chazy_residual(1.5, chazy_from_exponents(2.5, 2.5, fj.s_of_x)).measure());
        }
    }

    flush_accum(rep, acc, "identities", Rat(0), opt.tol);
    return rep;
}

VerificationReport verify_dualities(const VerifyOptions &opt) {
    VerificationReport rep = make_report(opt);
    std::mt19937 rng(opt.seed ^ 0x5bd1e995u);
    const int n = opt.samples;
    const int order = std::max(opt.order, 8);
    Accum acc;

    // quartic parametrisation: solution, its double integral, and the dual
    for (int i = 0; i < n; ++i) {
        cx s = sample_disc(rng, cx(0.30, 0.22), 0.10, {cx(0.0), cx(1.0), cx(0.5)});
        try {
            Jet S = Jet::variable(s, order);
            Jet x = S * S * S * (S - 2.0) / (2.0 * (2.0 * S - 1.0));
            Jet s_of_x = jet_reparam(S, x);
            Jet y = chazy_from_exponents(2.0, 2.0, s_of_x);
            acc.note("s333-third-order", chazy_residual(2.0 / 3.0, y).measure());
            cx yc = -4.0 * (2.0 * s - 1.0) * (5.0 * s * s - 5.0 * s + 2.0) /
                    (3.0 * s * s * s * std::pow(s - 1.0, 3));
            acc.note("s333-closed-y", rel(y.value(), yc));
            cx xi = s - 0.5;
            cx ycc = -(128.0 / 3.0) * xi * (20.0 * xi * xi + 3.0) /
                     (std::pow(2.0 * xi - 1.0, 3) * std::pow(2.0 * xi + 1.0, 3));
            acc.note("s333-centred-y", rel(y.value(), ycc));
            Jet F = (-9.0 / 4.0) * S - cx(9.0 / 8.0) / (2.0 * S - 1.0);
            Jet F_of_x = jet_reparam(F, x);
            acc.note("s333-sixth-order", ode6_residual(F_of_x).measure());
            acc.note("s333-first-derivative",
                     rel(F_of_x.deriv(1), 3.0 * (1.0 / s - 1.0 / (s - 1.0))));
            acc.note("s333-second-derivative",
                     rel(F_of_x.deriv(2),
                         std::pow(2.0 * s - 1.0, 3) / (std::pow(s, 4) * std::pow(s - 1.0, 4))));
            acc.note("s333-planar-curve", planar_curve_s333(x.value(), y.value()));
            auto [t_id, H_of_t] = legendre_dual(x, F);
            acc.note("s333-dual-form", noth_residual(H_of_t, NothForm::SixthOrder).measure());
            cx tc = -3.0 * (1.0 / (s - 1.0) - 1.0 / s);
            cx Hc = (9.0 / 4.0) * (1.0 / 6.0 + 2.0 * s / 3.0 + 2.0 / (3.0 * (s - 1.0)));
            acc.note("s333-dual-t", rel(t_id.value(), tc));
            acc.note("s333-dual-H", rel(H_of_t.value(), Hc));
            Jet t_par = F.derivative() / x.derivative();
            Jet H_par = x.truncated(order - 1) * t_par - F.truncated(order - 1);
            auto [x_back, F_back] = legendre_dual(t_par, H_par);
            double inv = std::max(rel(x_back.value(), x.value()), rel(F_back.value(), F.value()));
            acc.note("s333-involution", inv);
        } catch (const std::exception &) {
            acc.note("s333-evaluation", 1e300);
        }
    }

    // cubic parametrisation at k=3/2 with the algebraic surface for (t, H)
    for (int i = 0; i < n; ++i) {
        cx s = sample_disc(rng, cx(0.55, 0.35), 0.22, {cx(0.0), cx(1.0), cx(-2.0)});
        try {
            Jet S = Jet::variable(s, order);
            Jet c13 = jet_pow(S, 1.0 / 3.0);
            Jet t = 2.0 * c13 / (S + 2.0);
            Jet y_par = (-9.0 / 8.0) * (S + 2.0) * (S - 10.0) * c13 * c13 /
                        ((S - 1.0) * (S - 1.0));
            Jet y_of_t = jet_reparam(y_par, t);
            acc.note("oct-third-order", chazy_residual(1.5, y_of_t).measure());
            Jet s_of_t = jet_reparam(S, t);
            Jet y_exp = chazy_from_exponents(2.0, 1.5, s_of_t);
            acc.note("oct-exponent-form", rel(y_exp.value(), y_par.value()));
            Jet H_par = -4.0 * c13 * c13 / (S + 2.0);
            Jet H_of_t = jet_reparam(H_par, t);
            acc.note("oct-dual-form", noth_residual(H_of_t, NothForm::SixthOrder).measure());
            cx Hv = H_par.value(), tv = t.value();
            cx surf = Hv * Hv * Hv - 16.0 * tv * tv * tv - 8.0 * Hv * tv;
            double sscale = std::abs(Hv * Hv * Hv) + 16.0 * std::abs(tv * tv * tv) +
                            8.0 * std::abs(Hv * tv) + 1.0;
            acc.note("oct-cubic-surface", std::abs(surf) / sscale);
            acc.note("oct-planar-curve", planar_curve_oct(1.0 / tv, y_par.value()));
            auto [x_id, F_of_x] = legendre_dual(t, H_par);
            acc.note("oct-companion-sixth-order", ode6_residual(F_of_x).measure());
            cx xc = -(s - 4.0) * c13.value() / (s - 1.0);
            cx Fc = 2.0 * c13.value() * c13.value() / (s - 1.0);
            acc.note("oct-dual-x", rel(x_id.value(), xc));
            acc.note("oct-dual-F", rel(F_of_x.value(), Fc));
            Jet x_par = H_par.derivative() / t.derivative();
            Jet F_par = t.truncated(order - 1) * x_par - H_par.truncated(order - 1);
            auto [t_back, H_back] = legendre_dual(x_par, F_par);
            double inv = std::max(rel(t_back.value(), tv), rel(H_back.value(), Hv));
            acc.note("oct-involution", inv);
        } catch (const std::exception &) {
            acc.note("oct-evaluation", 1e300);
        }
    }

    // self-similar solution at k=3/2 and the curve carrying its dual pair
    for (int i = 0; i < n; ++i) {
        cx tau = sample_disc(rng, cx(0.35, 0.22), 0.12, {cx(0.0), cx(1.0), cx(-0.5)});
        try {
            Jet T = Jet::variable(tau, order);
            Jet c13 = jet_pow(T, 1.0 / 3.0);
            Jet t = 16.0 * c13 * c13 / (9.0 * (1.0 + 2.0 * T));
            Jet y_par = (81.0 / 64.0) * (1.0 + 2.0 * T) * (10.0 * T - 1.0) /
                        (c13 * c13 * (T - 1.0) * (T - 1.0));
            Jet y_of_t = jet_reparam(y_par, t);
            acc.note("lmn-third-order", chazy_residual(1.5, y_of_t).measure());
            Jet H_par = (1024.0 / 81.0) * c13 / (1.0 + 2.0 * T);
            Jet H_of_t = jet_reparam(H_par, t);
            acc.note("lmn-dual-form", noth_residual(H_of_t, NothForm::SixthOrder).measure());
            acc.note("lmn-log-derivative",
                     rel(y_of_t.value(), 1.5 * H_of_t.deriv(3) / H_of_t.deriv(2)));
            auto [x_id, F_of_x] = legendre_dual(t, H_par);
            acc.note("lmn-companion-sixth-order", ode6_residual(F_of_x).measure());
            cx xc = 32.0 * (4.0 * tau - 1.0) / (9.0 * c13.value() * (tau - 1.0));
            cx Fc = (512.0 / 81.0) * c13.value() / (tau - 1.0);
            acc.note("lmn-dual-x", rel(x_id.value(), xc));
            acc.note("lmn-dual-F", rel(F_of_x.value(), Fc));
            Jet x_par = H_par.derivative() / t.derivative();
            Jet F_par = t.truncated(order - 1) * x_par - H_par.truncated(order - 1);
            auto [t_back, H_back] = legendre_dual(x_par, F_par);
            double inv = std::max(rel(t_back.value(), t.value()), rel(H_back.value(), H_par.value()));
            acc.note("lmn-involution", inv);

            // the (t, H) curve shared with the cubic parametrisation
            Jet t2 = 2.0 * c13 * c13 / (1.0 + 2.0 * T);
            Jet H2 = -4.0 * c13 / (1.0 + 2.0 * T);
            cx H2v = H2.value(), t2v = t2.value();
            cx surf = H2v * H2v * H2v - 16.0 * t2v * t2v * t2v - 8.0 * H2v * t2v;
            double sscale = std::abs(H2v * H2v * H2v) + 16.0 * std::abs(t2v * t2v * t2v) +
                            8.0 * std::abs(H2v * t2v) + 1.0;
            acc.note("lmn-curve-cubic", std::abs(surf) / sscale);
            acc.note("lmn-curve-form",
                     noth_residual(jet_reparam(H2, t2), NothForm::SixthOrder).measure());
            auto [x2_id, F2_of_x] = legendre_dual(t2, H2);
            cx x2c = -(4.0 * tau - 1.0) / (c13.value() * (tau - 1.0));
            cx F2c = 2.0 * c13.value() / (1.0 - tau);
            acc.note("lmn-curve-dual-x", rel(x2_id.value(), x2c));
            acc.note("lmn-curve-dual-F", rel(F2_of_x.value(), F2c));
        } catch (const std::exception &) {
            acc.note("lmn-evaluation", 1e300);
        }
    }

    flush_accum(rep, acc, "dualities", Rat(3, 2), opt.tol);
    return rep;
}

VerificationReport verify_all(const Catalogue &cat, const VerifyOptions &opt) {
    VerificationReport rep = make_report(opt);
    for (int table = 1; table <= 4; ++table) rep.append(verify_table(cat, table, opt));
    rep.append(verify_identities(cat, opt));
    rep.append(verify_dualities(opt));
    return rep;
}

} // namespace chazylab
