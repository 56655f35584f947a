#include "chazylab/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace chazylab {

namespace {

class Parser {
public:
    Parser(const std::string &text, const std::map<std::string, Jet> &vars, BranchSpec branch)
        : text_(text), vars_(vars), branch_(branch) {
        if (vars_.empty()) throw ParseError("no variables supplied");
        const Jet &ref = vars_.begin()->second;
        base_ = ref.base();
        order_ = ref.order();
    }

    Jet parse() {
        Jet j = sum();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing input at '" + rest() + "'");
        return j;
    }

private:
    const std::string &text_;
    const std::map<std::string, Jet> &vars_;
    BranchSpec branch_;
    cx base_{};
    int order_ = 0;
    size_t pos_ = 0;

    std::string rest() const { return text_.substr(pos_, 12); }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Jet sum() {
        Jet j = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) j = j + term();
            else if (eat('-')) j = j - term();
            else return j;
        }
    }

    Jet term() {
        Jet j = power();
        for (;;) {
            if (eat('*')) j = j * power();
            else if (eat('/')) j = j / power();
            else return j;
        }
    }

    Jet power() {
        Jet b = primary();
        if (!eat('^')) return b;
        Jet e = eat('-') ? -power() : power();
        for (int k = 1; k <= e.order(); ++k)
            if (std::abs(e.coeff(k)) > 0.0) throw ParseError("exponent must be constant");
        cx ev = e.value();
        if (std::abs(ev.imag()) > 1e-12) throw ParseError("exponent must be real");
        double r = ev.real();
        double ri = std::round(r);
        if (std::abs(r - ri) < 1e-12) return int_pow(b, static_cast<long>(ri));
        return jet_pow(b, r, branch_);
    }

    Jet int_pow(const Jet &b, long n) {
        if (n < 0) return Jet::constant(1.0, base_, order_) / int_pow(b, -n);
        Jet acc = Jet::constant(1.0, base_, order_);
        Jet p = b;
        for (long m = n; m > 0; m >>= 1) {
            if (m & 1) acc = acc * p;
            p = p * p;
        }
        return acc;
    }

    Jet primary() {
        skip_ws();
        if (eat('(')) {
            Jet j = sum();
            if (!eat(')')) throw ParseError("expected ')' at '" + rest() + "'");
            return j;
        }
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        throw ParseError(std::string("unexpected character '") + c + "'");
    }

    Jet number() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        double v = std::strtod(text_.substr(start, pos_ - start).c_str(), nullptr);
        return Jet::constant(v, base_, order_);
    }

    Jet ident() {
        size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (peek() == '(') {
            eat('(');
            Jet arg = sum();
            if (!eat(')')) throw ParseError("expected ')' after " + name + " argument");
            if (name == "sqrt") return jet_sqrt(arg, branch_);
            if (name == "sin") return jet_sin(arg);
            if (name == "cos") return jet_cos(arg);
            if (name == "tan") return jet_tan(arg);
            if (name == "exp") return jet_exp(arg);
            if (name == "log") return jet_log(arg, branch_);
            throw ParseError("unknown function '" + name + "'");
        }
        auto it = vars_.find(name);
        if (it != vars_.end()) return it->second;
        if (name == "i") return Jet::constant(cx(0.0, 1.0), base_, order_);
        if (name == "pi") return Jet::constant(M_PI, base_, order_);
        if (name == "w")
            return Jet::constant(std::exp(cx(0.0, 2.0 * M_PI / 3.0)), base_, order_);
        throw ParseError("unknown identifier '" + name + "'");
    }
};

} // namespace

Jet eval_expr(const std::string &text, const std::map<std::string, Jet> &vars, BranchSpec branch) {
    return Parser(text, vars, branch).parse();
}

} // namespace chazylab
