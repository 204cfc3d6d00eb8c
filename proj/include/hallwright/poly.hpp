#pragma once

// Dense univariate polynomials over the integers.  These are the building
// blocks of rational functions in q (QRat); all arithmetic is exact.

#include "hallwright/numeric.hpp"

#include <vector>

namespace hallwright {

class Poly {
public:
    // Coefficients in ascending degree; invariant: empty or nonzero leading.
    std::vector<Int> c;

    Poly() = default;
    explicit Poly(Int constant) {
        if (constant != 0) c.push_back(std::move(constant));
    }
    explicit Poly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    // x^k with coefficient a.
    static Poly monomial(Int a, int k);
    // The variable itself.
    static Poly var() { return monomial(1, 1); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for 0
    const Int& leading() const;
    Int content() const;       // gcd of coefficients, >= 0 (0 for zero poly)
    bool is_constant() const { return c.size() <= 1; }

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;

    // Substitute x -> x^d (d >= 1).
    Poly subst_power(int d) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Int& k);

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }
    // Arbitrary total order, usable as a map key.
    bool operator<(const Poly& o) const;

    std::string str(const std::string& var = "q") const;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

// Exact division: a = b * quotient with zero remainder over Q[x]; the
// quotient is required to have integer coefficients.  Throws otherwise.
Poly exact_div(const Poly& a, const Poly& b);

// Greatest common divisor in Z[x]: primitive, positive leading coefficient.
// gcd of contents is NOT included (gcd_poly(4x, 6) = 1, not 2); QRat handles
// the integer content separately.
Poly gcd_poly(const Poly& a, const Poly& b);

// q^m - q^i product helper: |GL_m(F_q)| as a polynomial in q.
Poly gl_order_poly(int m);

// Gaussian binomial [m choose k]_q via the q-Pascal recurrence (exact, no
// division).
Poly gauss_binomial(int m, int k);

} // namespace hallwright
