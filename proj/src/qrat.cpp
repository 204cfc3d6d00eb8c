#include "hallwright/qrat.hpp"

namespace hallwright {

void QRat::reduce() {
    check(!den_.is_zero(), "QRat: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Int(1));
        return;
    }
    Poly g = gcd_poly(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Int cn = num_.content(), cd = den_.content();
    Int c = boost::multiprecision::gcd(cn, cd);
    if (c > 1) {
        num_ = exact_div(num_, Poly(c));
        den_ = exact_div(den_, Poly(c));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

const Poly& QRat::as_poly() const {
    check(is_integer_polynomial(), "QRat::as_poly: not an integer polynomial");
    return num_;
}

Rat QRat::as_rational() const {
    check(is_rational(), "QRat::as_rational: not a constant");
    Int n = num_.is_zero() ? Int(0) : num_.c[0];
    return Rat(n, den_.c[0]);
}

Rat QRat::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    check(d != 0, "QRat::eval: denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

QRat QRat::subst_power(int d) const {
    return QRat(num_.subst_power(d), den_.subst_power(d));
}

QRat QRat::subst_inverse_power(int d) const {
    check(d >= 1, "QRat::subst_inverse_power: d must be >= 1");
    if (is_zero()) return QRat();
    // f(x) = n(x)/m(x); f(y^-d) = y^{d(D-degn)} rev(n)(y^d) / ...
    // Uniform route: multiply both by y^{dD}, D = max(deg n, deg m).
    int D = std::max(num_.degree(), den_.degree());
    auto lift = [&](const Poly& p) {
        std::vector<Int> out(static_cast<size_t>(D) * d + 1, Int(0));
        for (size_t i = 0; i < p.c.size(); ++i)
            out[static_cast<size_t>(D - static_cast<int>(i)) * d] = p.c[i];
        return Poly(std::move(out));
    };
    return QRat(lift(num_), lift(den_));
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator*(const QRat& a, const QRat& b) {
    return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
    check(!b.is_zero(), "QRat: division by zero");
    return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string QRat::str(const std::string& var) const {
    if (is_zero()) return "0";
    if (is_rational()) {
        Rat r = as_rational();
        std::string s = rat_num(r).str();
        if (rat_den(r) != 1) s += "/" + rat_den(r).str();
        return s;
    }
    auto wrap = [&](const Poly& p) {
        std::string s = p.str(var);
        // Bare if a single signed term, else parenthesized.
        int terms = 0;
        for (const Int& c : p.c) terms += (c != 0);
        return terms > 1 ? "(" + s + ")" : s;
    };
    if (is_polynomial()) {
        if (den_.leading() == 1) return num_.str(var);
        return wrap(num_) + "/" + den_.leading().str();
    }
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace hallwright
