#pragma once

// QRat: field of rational functions in one formal variable with exact
// integer-polynomial numerator and denominator, kept in canonical reduced
// form.  Used with the variable read as q (Hall-algebra coefficients) or as
// s (Hall-Littlewood parameter); the variable name only matters for
// printing.

#include "hallwright/poly.hpp"

namespace hallwright {

class QRat {
public:
    QRat() : num_(), den_(Int(1)) {}
    QRat(int v) : num_(Int(v)), den_(Int(1)) {}              // NOLINT implicit
    QRat(const Int& v) : num_(v), den_(Int(1)) {}            // NOLINT implicit
    QRat(const Rat& v) : num_(rat_num(v)), den_(rat_den(v)) {} // NOLINT
    explicit QRat(Poly p) : num_(std::move(p)), den_(Int(1)) {}
    QRat(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static QRat var() { return QRat(Poly::var()); }            // q itself
    static QRat var_pow(int k) { return QRat(Poly::monomial(1, k)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_ && !num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_integer_polynomial() const {
        return den_.is_constant() && den_.leading() == 1;
    }
    // Requires is_integer_polynomial().
    const Poly& as_poly() const;
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rat as_rational() const; // requires is_rational()

    // Exact evaluation at a rational point; throws if the denominator
    // vanishes there.
    Rat eval(const Rat& x) const;
    Rat eval(const Int& x) const { return eval(Rat(x)); }

    // Substitute x -> x^d, d >= 1.
    QRat subst_power(int d) const;
    // Substitute x -> y^{-d} (d >= 1), returning a rational function in y.
    QRat subst_inverse_power(int d) const;

    QRat operator-() const;
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    // Structural equality of canonical forms (== equality in the field).
    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }
    bool operator<(const QRat& o) const { // map-key order only
        if (!(num_ == o.num_)) return num_ < o.num_;
        return den_ < o.den_;
    }

    std::string str(const std::string& var = "q") const;

private:
    Poly num_, den_;

    // Canonical form: gcd(num, den) = 1 in Q[x], integer contents coprime,
    // den nonzero with positive leading coefficient.
    void reduce();
};

} // namespace hallwright
