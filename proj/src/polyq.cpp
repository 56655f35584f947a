#include "chazylab/polyq.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chazylab {

void PolyQ::strip() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::complex<double> PolyQ::eval(std::complex<double> x) const {
    std::complex<double> r = 0.0;
    for (int i = degree(); i >= 0; --i) r = r * x + static_cast<double>(c[static_cast<size_t>(i)]);
    return r;
}

PolyQ operator+(const PolyQ &a, const PolyQ &b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return PolyQ(std::move(c));
}
PolyQ operator-(const PolyQ &a, const PolyQ &b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return PolyQ(std::move(c));
}
PolyQ operator*(const PolyQ &a, const PolyQ &b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return PolyQ(std::move(c));
}
bool operator==(const PolyQ &a, const PolyQ &b) { return a.c == b.c; }

PolyQ exact_div(const PolyQ &a, const PolyQ &b) {
    if (b.is_zero()) throw std::runtime_error("polynomial division by zero");
    if (a.is_zero()) return PolyQ();
    if (a.degree() < b.degree()) throw std::runtime_error("polynomial division not exact");
    PolyQ rem = a;
    std::vector<Rat> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        Rat f = rem.coeff(i + b.degree()) / b.c.back();
        q[static_cast<size_t>(i)] = f;
        if (f != 0)
            for (int j = 0; j <= b.degree(); ++j)
                rem.c[static_cast<size_t>(i + j)] -= f * b.coeff(j);
    }
    rem.strip();
    if (!rem.is_zero()) throw std::runtime_error("polynomial division not exact");
    return PolyQ(std::move(q));
}

PolyQ2 PolyQ2::constant(Rat v) {
    PolyQ2 p;
    p.m = {{std::move(v)}};
    p.strip();
    return p;
}
PolyQ2 PolyQ2::var_x() {
    PolyQ2 p;
    p.m = {{Rat(0)}, {Rat(1)}};
    return p;
}
PolyQ2 PolyQ2::var_y() {
    PolyQ2 p;
    p.m = {{Rat(0), Rat(1)}};
    return p;
}

void PolyQ2::strip() {
    for (auto &row : m)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!m.empty() && m.back().empty()) m.pop_back();
}

bool PolyQ2::is_zero() const {
    for (const auto &row : m)
        for (const auto &v : row)
            if (v != 0) return false;
    return true;
}

int PolyQ2::deg_y() const {
    int d = -1;
    for (const auto &row : m) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

Rat PolyQ2::coeff(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(m.size())) return Rat(0);
    const auto &row = m[static_cast<size_t>(i)];
    if (j < 0 || j >= static_cast<int>(row.size())) return Rat(0);
    return row[static_cast<size_t>(j)];
}

void PolyQ2::set_coeff(int i, int j, Rat v) {
    if (i >= static_cast<int>(m.size())) m.resize(static_cast<size_t>(i) + 1);
    auto &row = m[static_cast<size_t>(i)];
    if (j >= static_cast<int>(row.size())) row.resize(static_cast<size_t>(j) + 1, Rat(0));
    row[static_cast<size_t>(j)] = std::move(v);
}

std::complex<double> PolyQ2::eval(std::complex<double> x, std::complex<double> y) const {
    std::complex<double> r = 0.0;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
        std::complex<double> row = 0.0;
        const auto &rc = m[static_cast<size_t>(i)];
        for (int j = static_cast<int>(rc.size()) - 1; j >= 0; --j)
            row = row * y + static_cast<double>(rc[static_cast<size_t>(j)]);
        r = r * x + row;
    }
    return r;
}

double PolyQ2::eval_scale(std::complex<double> x, std::complex<double> y) const {
    double s = 0.0;
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != 0)
                s += std::abs(static_cast<double>(m[i][j])) * std::pow(std::abs(x), double(i)) *
                     std::pow(std::abs(y), double(j));
    return s;
}

PolyQ2 operator+(const PolyQ2 &a, const PolyQ2 &b) {
    PolyQ2 r = a;
    for (size_t i = 0; i < b.m.size(); ++i)
        for (size_t j = 0; j < b.m[i].size(); ++j)
            r.set_coeff(static_cast<int>(i), static_cast<int>(j),
                        r.coeff(static_cast<int>(i), static_cast<int>(j)) + b.m[i][j]);
    r.strip();
    return r;
}
PolyQ2 operator-(const PolyQ2 &a, const PolyQ2 &b) {
    PolyQ2 r = a;
    for (size_t i = 0; i < b.m.size(); ++i)
        for (size_t j = 0; j < b.m[i].size(); ++j)
            r.set_coeff(static_cast<int>(i), static_cast<int>(j),
                        r.coeff(static_cast<int>(i), static_cast<int>(j)) - b.m[i][j]);
    r.strip();
    return r;
}
PolyQ2 operator*(const PolyQ2 &a, const PolyQ2 &b) {
    PolyQ2 r;
    for (size_t i = 0; i < a.m.size(); ++i)
        for (size_t j = 0; j < a.m[i].size(); ++j) {
            if (a.m[i][j] == 0) continue;
            for (size_t k = 0; k < b.m.size(); ++k)
                for (size_t l = 0; l < b.m[k].size(); ++l) {
                    if (b.m[k][l] == 0) continue;
                    r.set_coeff(static_cast<int>(i + k), static_cast<int>(j + l),
                                r.coeff(static_cast<int>(i + k), static_cast<int>(j + l)) +
                                    a.m[i][j] * b.m[k][l]);
                }
        }
    r.strip();
    return r;
}
PolyQ2 operator*(const PolyQ2 &a, const Rat &s) {
    PolyQ2 r = a;
    for (auto &row : r.m)
        for (auto &v : row) v *= s;
    r.strip();
    return r;
}
bool operator==(const PolyQ2 &a, const PolyQ2 &b) { return (a - b).is_zero(); }

// exact division treating both as polynomials in x over Q[y]
PolyQ2 exact_div(const PolyQ2 &a, const PolyQ2 &b) {
    if (b.is_zero()) throw std::runtime_error("polynomial division by zero");
    if (a.is_zero()) return PolyQ2();
    auto row_poly = [](const PolyQ2 &p, int i) {
        PolyQ r;
        if (i <= p.deg_x() && i >= 0) r = PolyQ(p.m[static_cast<size_t>(i)]);
        return r;
    };
    int da = a.deg_x(), db = b.deg_x();
    if (da < db) throw std::runtime_error("polynomial division not exact");
    std::vector<PolyQ> rem(static_cast<size_t>(da) + 1);
    for (int i = 0; i <= da; ++i) rem[static_cast<size_t>(i)] = row_poly(a, i);
    PolyQ blead = row_poly(b, db);
    std::vector<PolyQ> q(static_cast<size_t>(da - db) + 1);
    for (int i = da - db; i >= 0; --i) {
        PolyQ f = exact_div(rem[static_cast<size_t>(i + db)], blead);
        q[static_cast<size_t>(i)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i + j)] = rem[static_cast<size_t>(i + j)] - f * row_poly(b, j);
    }
    for (const auto &r : rem)
        if (!r.is_zero()) throw std::runtime_error("polynomial division not exact");
    PolyQ2 out;
    for (size_t i = 0; i < q.size(); ++i)
        for (int j = 0; j <= q[i].degree(); ++j)
            out.set_coeff(static_cast<int>(i), j, q[i].coeff(j));
    out.strip();
    return out;
}

void PolyS::strip() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

PolyQ2 resultant(const PolyS &p_in, const PolyS &q_in) {
    PolyS p = p_in, q = q_in;
    p.strip();
    q.strip();
    int dp = p.degree(), dq = q.degree();
    if (dp < 1 || dq < 1) throw ZeroPolynomial();
    int n = dp + dq;
    // Sylvester matrix over Q[x,y]
    std::vector<std::vector<PolyQ2>> a(static_cast<size_t>(n),
                                       std::vector<PolyQ2>(static_cast<size_t>(n)));
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i) a[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = p.c[static_cast<size_t>(dp - i)];
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i) a[static_cast<size_t>(dq + r)][static_cast<size_t>(r + i)] = q.c[static_cast<size_t>(dq - i)];

    // Bareiss fraction-free elimination; each division is exact in Q[x,y].
    PolyQ2 prev = PolyQ2::constant(Rat(1));
    Rat sign(1);
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
                    swap = r;
                    break;
                }
            if (swap < 0) return PolyQ2(); // zero column => resultant 0
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                PolyQ2 num = a[static_cast<size_t>(k)][static_cast<size_t>(k)] * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                             a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num.is_zero() ? PolyQ2() : exact_div(num, prev);
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = PolyQ2();
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] * sign;
}

PolyQ2 canonicalize(const PolyQ2 &p_in) {
    PolyQ2 p = p_in;
    p.strip();
    if (p.is_zero()) return p;
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto &row : p.m)
        for (const auto &v : row) {
            if (v == 0) continue;
            num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(v)));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(v));
        }
    Rat content(num_gcd, den_lcm);
    // leading coefficient in lex order (highest x, then highest y)
    Rat lead(0);
    for (int i = p.deg_x(); i >= 0 && lead == 0; --i)
        for (int j = static_cast<int>(p.m[static_cast<size_t>(i)].size()) - 1; j >= 0; --j)
            if (p.coeff(i, j) != 0) {
                lead = p.coeff(i, j);
                break;
            }
    Rat scale = Rat(1) / content;
    if (lead < 0) scale = -scale;
    return p * scale;
}

std::string to_canonical_string(const PolyQ2 &p_in, const std::string &xname, const std::string &yname) {
    PolyQ2 p = canonicalize(p_in);
    if (p.is_zero()) return "0";
    struct Term {
        int i, j;
        Rat c;
    };
    std::vector<Term> terms;
    for (int i = 0; i <= p.deg_x(); ++i)
        for (int j = 0; j < static_cast<int>(p.m[static_cast<size_t>(i)].size()); ++j)
            if (p.coeff(i, j) != 0) terms.push_back({i, j, p.coeff(i, j)});
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) {
        if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
        return a.i > b.i;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms) {
        Rat c = t.c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (c < 0) c = -c;
        bool has_var = t.i > 0 || t.j > 0;
        if (c != 1 || !has_var) os << rat_str(c);
        if (t.i > 0) {
            if (c != 1) os << "*";
            os << xname;
            if (t.i > 1) os << "^" << t.i;
        }
        if (t.j > 0) {
            if (c != 1 || t.i > 0) os << "*";
            os << yname;
            if (t.j > 1) os << "^" << t.j;
        }
    }
    return os.str();
}

PolyQ2 reverse_x(const PolyQ2 &p_in) {
    PolyQ2 p = p_in;
    p.strip();
    PolyQ2 r;
    int d = p.deg_x();
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < static_cast<int>(p.m[static_cast<size_t>(i)].size()); ++j)
            if (p.coeff(i, j) != 0) r.set_coeff(d - i, j, p.coeff(i, j));
    r.strip();
    return r;
}

} // namespace chazylab
