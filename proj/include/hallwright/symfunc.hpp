#pragma once

// Symmetric functions with coefficients in Q(s), stored on the monomial
// basis.  The formal variable of the coefficient field is the
// Hall-Littlewood parameter s.  Hall-Littlewood polynomials are computed
// from the antisymmetrized definition in finitely many variables (the
// expansion is stable once the variable count reaches the degree).

#include "hallwright/partition.hpp"
#include "hallwright/qrat.hpp"

#include <map>
#include <string>

namespace hallwright {

class SymFunc {
public:
    SymFunc() = default;
    explicit SymFunc(int k) : SymFunc(QRat(k)) {}
    explicit SymFunc(const QRat& k);

    // Basis elements and generators.
    static SymFunc monomial(const Partition& lambda); // m_lambda
    static SymFunc e(int n);                          // elementary
    static SymFunc h(int n);                          // complete homogeneous
    static SymFunc p(int n);                          // power sum
    // Hall-Littlewood P_lambda(x; s), cached.
    static const SymFunc& hall_littlewood(const Partition& lambda);
    // Uncached variant with an explicit variable count (>= |lambda| is exact;
    // exposed so stability is testable).
    static SymFunc hall_littlewood_nvars(const Partition& lambda, int nvars);

    const std::map<Partition, QRat>& coeffs() const { return c_; }
    QRat coeff(const Partition& mu) const;
    bool is_zero() const { return c_.empty(); }

    SymFunc scaled(const QRat& k) const;

    SymFunc operator-() const { return scaled(QRat(-1)); }
    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }
    bool operator==(const SymFunc& o) const { return c_ == o.c_; }

    // Expansion over the Hall-Littlewood P basis (unitriangular against the
    // monomial basis, so this is a finite back substitution).
    std::map<Partition, QRat> in_hl_basis() const;

    std::string str() const; // e.g. "m[2] + (1-s) m[1,1]"

private:
    std::map<Partition, QRat> c_; // zero coefficients are never stored
    void insert_term(const Partition& mu, const QRat& v);
};

// Number of semistandard tableaux of the given shape and content.
long long kostka_number(const Partition& shape, const Partition& content);

} // namespace hallwright
