#include "hallwright/poly.hpp"

#include <map>
#include <sstream>

namespace hallwright {

Poly Poly::monomial(Int a, int k) {
    Poly p;
    if (a == 0) return p;
    p.c.assign(static_cast<size_t>(k) + 1, Int(0));
    p.c.back() = std::move(a);
    return p;
}

const Int& Poly::leading() const {
    static const Int zero = 0;
    return c.empty() ? zero : c.back();
}

Int Poly::content() const {
    Int g = 0;
    for (const Int& a : c) g = boost::multiprecision::gcd(g, a);
    return g < 0 ? Int(-g) : g;
}

Rat Poly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

Int Poly::eval_int(const Int& x) const {
    Int r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::subst_power(int d) const {
    check(d >= 1, "Poly::subst_power: d must be >= 1");
    if (is_zero()) return {};
    std::vector<Int> out(static_cast<size_t>(degree()) * d + 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i) out[i * d] = c[i];
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Int& a : r.c) a = -a;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Int& k) {
    if (k == 0) {
        c.clear();
        return *this;
    }
    for (Int& a : c) a *= k;
    return *this;
}

bool Poly::operator<(const Poly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = c.size(); i-- > 0;)
        if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        Int a = c[i];
        if (first) {
            if (a < 0) os << '-';
        } else {
            os << (a < 0 ? '-' : '+');
        }
        first = false;
        Int mag = a < 0 ? Int(-a) : a;
        if (mag != 1 || i == 0) os << mag.str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << '^' << i;
        }
    }
    return os.str();
}

namespace {

// Rational-coefficient helpers used internally for division and gcd.
using RPoly = std::vector<Rat>; // ascending, trimmed

RPoly to_rpoly(const Poly& p) {
    RPoly r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = Rat(p.c[i]);
    return r;
}

void rtrim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a mod b over Q[x]; a is consumed.
RPoly rmod(RPoly a, const RPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        rtrim(a);
    }
    return a;
}

} // namespace

Poly exact_div(const Poly& a, const Poly& b) {
    check(!b.is_zero(), "exact_div: division by zero polynomial");
    if (a.is_zero()) return {};
    check(a.degree() >= b.degree(), "exact_div: not divisible (degree)");
    RPoly ra = to_rpoly(a), rb = to_rpoly(b);
    RPoly q(ra.size() - rb.size() + 1, Rat(0));
    while (ra.size() >= rb.size() && !ra.empty()) {
        Rat f = ra.back() / rb.back();
        size_t shift = ra.size() - rb.size();
        q[shift] = f;
        for (size_t i = 0; i < rb.size(); ++i) ra[shift + i] -= f * rb[i];
        rtrim(ra);
    }
    check(ra.empty(), "exact_div: nonzero remainder");
    std::vector<Int> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        check(is_integer(q[i]), "exact_div: non-integer quotient coefficient");
        out[i] = rat_num(q[i]);
    }
    return Poly(std::move(out));
}

Poly gcd_poly(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    RPoly x = to_rpoly(a), y = to_rpoly(b);
    rtrim(x);
    rtrim(y);
    while (!y.empty()) {
        RPoly r = rmod(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    // Clear denominators, make primitive with positive leading coefficient.
    Int den_lcm = 1;
    for (const Rat& v : x) den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(v));
    std::vector<Int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = rat_num(x[i]) * (den_lcm / rat_den(x[i]));
    Poly g{std::move(z)};
    Int cont = g.content();
    if (cont > 1) g = exact_div(g, Poly(cont));
    if (g.leading() < 0) g = -g;
    return g;
}

Poly gl_order_poly(int m) {
    check(m >= 0, "gl_order_poly: m must be >= 0");
    Poly r(Int(1));
    Poly qm = Poly::monomial(1, m);
    for (int i = 0; i < m; ++i) r *= (qm - Poly::monomial(1, i));
    return r;
}

Poly gauss_binomial(int m, int k) {
    if (k < 0 || k > m) return {};
    // [m k]_q = [m-1 k-1]_q + q^k [m-1 k]_q, computed row by row.
    std::vector<Poly> row(static_cast<size_t>(m) + 1);
    row[0] = Poly(Int(1));
    for (int n = 1; n <= m; ++n) {
        for (int j = n; j >= 1; --j) {
            Poly t = row[j].is_zero() ? Poly() : Poly::monomial(1, j) * row[j];
            row[j] = row[j - 1] + t;
        }
    }
    return row[k];
}

} // namespace hallwright
