#pragma once
// The curve catalogue: one record per closed-form solution family, loaded
// from data/catalogue.txt, plus the verification passes built on top of it
// (per-family residual checks, cross-family identities, duality pipelines).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chazylab/chazy_ode.hpp"
#include "chazylab/expr.hpp"
#include "chazylab/report.hpp"
#include "chazylab/schwarz.hpp"

namespace chazylab {

struct CatalogueError : std::runtime_error {
    explicit CatalogueError(const std::string &what) : std::runtime_error("catalogue: " + what) {}
};

struct CurveFamily {
    std::string id;
    Rat k;
    TriangleAngles angles;
    std::string param = "s";
    std::string s_from_param = "s";
    std::string x_expr; // "hyp" selects the hypergeometric quotient
    std::string y_expr;
    std::string y_of_x;
    std::string y2_of_x;
    std::string F_expr;
    std::string H_expr;
    Rat exp_a, exp_b;
    bool has_second_exponents = false;
    Rat exp2_a, exp2_b;
    std::string implicit_lhs, implicit_rhs;
    std::string same_as, arg_scale, outer_s;
    bool invertible = false;
    cx anchor{};
    double radius = 0.1;
    std::vector<cx> avoid;

    int table() const;
};

class Catalogue {
public:
    static std::string default_path();
    static Catalogue load(const std::string &path = default_path());

    const CurveFamily *find(const std::string &id) const;
    const CurveFamily &at(const std::string &id) const;
    const std::vector<CurveFamily> &families() const { return families_; }

private:
    std::vector<CurveFamily> families_;
};

struct FamilyJets {
    Jet param;  // identity jet in the parametrisation variable
    Jet s;      // s along the parameter
    Jet x;      // independent variable along the parameter
    Jet s_of_x; // s as a function of the independent variable
    Jet y;      // solution built from the row's exponents, as a function of x
    std::map<std::string, Jet> vars; // parameter-jet scope for the row's expressions
};

FamilyJets eval_family(const CurveFamily &fam, cx p, int order);

struct VerifyOptions {
    int samples = 64;
    int order = 8;
    unsigned seed = 0;
    double tol = 1e-8;
};

VerificationReport verify_family(const Catalogue &cat, const CurveFamily &fam,
                                 const VerifyOptions &opt);
VerificationReport verify_table(const Catalogue &cat, int table, const VerifyOptions &opt);
VerificationReport verify_identities(const Catalogue &cat, const VerifyOptions &opt);
VerificationReport verify_dualities(const VerifyOptions &opt);
VerificationReport verify_all(const Catalogue &cat, const VerifyOptions &opt);

} // namespace chazylab
