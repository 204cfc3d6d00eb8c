#include "doctest.h"

#include "hallwright/classical_hall.hpp"
#include "hallwright/series.hpp"
#include "hallwright/symfunc.hpp"

using namespace hallwright;

namespace {

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}) via permutation expansion.
SymFunc jacobi_trudi(const Partition& lambda) {
    int n = std::max(lambda.length(), 1);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    SymFunc det;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        SymFunc term(inv % 2 ? -1 : 1);
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            int deg = lambda.part(i + 1) - (i + 1) + (perm[i] + 1);
            if (deg < 0)
                zero = true;
            else
                term *= SymFunc::h(deg);
        }
        if (!zero) det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

TEST_CASE("monomial basis products") {
    SymFunc m1 = SymFunc::monomial(Partition({1}));
    SymFunc m2 = SymFunc::monomial(Partition({2}));
    SymFunc m11 = SymFunc::monomial(Partition({1, 1}));
    CHECK(m1 * m1 == m2 + m11.scaled(QRat(2)));
    CHECK(m1 * m2 ==
          SymFunc::monomial(Partition({3})) + SymFunc::monomial(Partition({2, 1})));
    // e(2) e(1) = m(2,1) + 3 m(1,1,1).
    CHECK(SymFunc::e(2) * SymFunc::e(1) ==
          SymFunc::monomial(Partition({2, 1})) +
              SymFunc::monomial(Partition({1, 1, 1})).scaled(QRat(3)));
    // Multiplication is commutative and unital.
    for (int a = 1; a <= 3; ++a)
        for (const auto& la : partitions_of(a))
            for (int b = 1; b <= 3; ++b)
                for (const auto& mu : partitions_of(b)) {
                    SymFunc x = SymFunc::monomial(la), y = SymFunc::monomial(mu);
                    CHECK(x * y == y * x);
                    CHECK(x * SymFunc(1) == x);
                }
}

TEST_CASE("generator expansions and a Newton identity") {
    CHECK(SymFunc::h(2) ==
          SymFunc::monomial(Partition({2})) + SymFunc::monomial(Partition({1, 1})));
    CHECK(SymFunc::e(2) == SymFunc::monomial(Partition({1, 1})));
    CHECK(SymFunc::p(2) == SymFunc::monomial(Partition({2})));
    CHECK(SymFunc::p(1) * SymFunc::p(1) ==
          SymFunc::p(2) + SymFunc::e(2).scaled(QRat(2)));
    // p3 = p1^3 - 3 p1 e2 + 3 e3.
    SymFunc p1 = SymFunc::p(1);
    CHECK(SymFunc::p(3) ==
          p1 * p1 * p1 - (p1 * SymFunc::e(2)).scaled(QRat(3)) +
              SymFunc::e(3).scaled(QRat(3)));
}

TEST_CASE("Hall-Littlewood basics") {
    // P_2 = m_2 + (1-s) m_11.
    const SymFunc& p2 = SymFunc::hall_littlewood(Partition({2}));
    CHECK(p2.coeff(Partition({2})).is_one());
    CHECK(p2.coeff(Partition({1, 1})).str("s") == "-s+1");
    // Columns give elementaries regardless of the parameter.
    for (int n = 1; n <= 6; ++n)
        CHECK(SymFunc::hall_littlewood(Partition(std::vector<int>(n, 1))) == SymFunc::e(n));
    // Unitriangular with unit diagonal, lower terms strictly dominated.
    for (int w = 1; w <= 5; ++w)
        for (const auto& la : partitions_of(w)) {
            const SymFunc& p = SymFunc::hall_littlewood(la);
            CHECK(p.coeff(la).is_one());
            for (const auto& [mu, c] : p.coeffs()) {
                (void)c;
                CHECK(dominates(la, mu));
            }
        }
}

TEST_CASE("Hall-Littlewood specializations at s=0 and s=1") {
    for (int w = 1; w <= 5; ++w)
        for (const auto& la : partitions_of(w)) {
            const SymFunc& p = SymFunc::hall_littlewood(la);
            SymFunc jt = jacobi_trudi(la);
            for (const auto& mu : partitions_of(w)) {
                // s=0 is the Schur function: Jacobi-Trudi and Kostka agree.
                CHECK(p.coeff(mu).eval(Rat(0)) == jt.coeff(mu).eval(Rat(0)));
                CHECK(jt.coeff(mu).eval(Rat(0)) == Rat(kostka_number(la, mu)));
                // s=1 collapses to the monomial function.
                CHECK(p.coeff(mu).eval(Rat(1)) == Rat(mu == la ? 1 : 0));
            }
        }
}

TEST_CASE("Hall-Littlewood expansions are stable in the variable count") {
    for (int w = 1; w <= 4; ++w)
        for (const auto& la : partitions_of(w))
            for (int extra = 1; extra <= 2; ++extra)
                CHECK(SymFunc::hall_littlewood_nvars(la, w + extra) ==
                      SymFunc::hall_littlewood(la));
}

TEST_CASE("expansion over the Hall-Littlewood basis round trips") {
    QRat s = QRat::var();
    SymFunc f = SymFunc::hall_littlewood(Partition({2, 1})).scaled(QRat(1) + s) +
                SymFunc::hall_littlewood(Partition({1, 1})).scaled(QRat(3)) -
                SymFunc::hall_littlewood(Partition({3})).scaled(s * s);
    auto expansion = f.in_hl_basis();
    CHECK(expansion.size() == 3);
    CHECK(expansion.at(Partition({2, 1})) == QRat(1) + s);
    CHECK(expansion.at(Partition({1, 1})) == QRat(3));
    CHECK(expansion.at(Partition({3})) == -(s * s));
    // Rebuild from any monomial combination.
    SymFunc g = SymFunc::monomial(Partition({2, 2})).scaled(s) +
                SymFunc::monomial(Partition({1, 1})) + SymFunc(7);
    SymFunc back;
    for (const auto& [la, c] : g.in_hl_basis())
        back += SymFunc::hall_littlewood(la).scaled(c);
    CHECK(back == g);
}

TEST_CASE("structure constants mirror Hall polynomials under inversion") {
    // The coefficient of P_nu in P_lambda P_mu, with s replaced by 1/q and
    // scaled by q^{n(nu)-n(lambda)-n(mu)}, is the Hall structure constant.
    for (int w = 2; w <= 5; ++w)
        for (int wl = 1; wl < w; ++wl)
            for (const auto& la : partitions_of(wl))
                for (const auto& mu : partitions_of(w - wl)) {
                    SymFunc prod = SymFunc::hall_littlewood(la) * SymFunc::hall_littlewood(mu);
                    auto expansion = prod.in_hl_basis();
                    for (const auto& nu : partitions_of(w)) {
                        QRat f(0);
                        auto it = expansion.find(nu);
                        if (it != expansion.end()) f = it->second;
                        if (f.is_zero()) {
                            CHECK(hall_poly(la, mu, nu).is_zero());
                            continue;
                        }
                        int twist = static_cast<int>(
                            nu.n_stat() - la.n_stat() - mu.n_stat());
                        REQUIRE(twist >= 0);
                        QRat lhs = f.subst_inverse_power(1) * QRat::var_pow(twist);
                        CHECK(lhs == hall_poly(la, mu, nu));
                    }
                }
}

TEST_CASE("series arithmetic over the rationals") {
    FormalSeries<QRat> f(5), g(5);
    // f = 1/(1-t), g = 1-t.
    for (int n = 0; n <= 5; ++n) f.set(n, QRat(1));
    g.set(0, QRat(1));
    g.set(1, QRat(-1));
    FormalSeries<QRat> one(5);
    one.set(0, QRat(1));
    CHECK(f * g == one);
    CHECK(f.inverse() == g);
    // d/dt log(1/(1-t)) = 1/(1-t).
    FormalSeries<QRat> ld = f.log_derivative();
    for (int n = 0; n <= 4; ++n) CHECK(ld.at(n) == QRat(1));
}

TEST_CASE("generating series of the classical bases") {
    const int T = 6;
    FormalSeries<SymFunc> H(T), E(T), P(T - 1);
    H.set(0, SymFunc(1));
    E.set(0, SymFunc(1));
    for (int n = 1; n <= T; ++n) {
        H.set(n, SymFunc::h(n));
        E.set(n, SymFunc::e(n).scaled(QRat(n % 2 ? -1 : 1))); // E(-t)
        P.set(n - 1, SymFunc::p(n));
    }
    // H(t) E(-t) = 1.
    FormalSeries<SymFunc> prod = H * E;
    CHECK(prod.at(0) == SymFunc(1));
    for (int n = 1; n <= T; ++n) CHECK(prod.at(n).is_zero());
    // P(t) = (d/dt) log H(t).
    CHECK(H.log_derivative() == P);
}

TEST_CASE("the one-row Hall-Littlewood generating identity") {
    const int T = 5;
    QRat s = QRat::var();
    FormalSeries<SymFunc> H(T), Hs(T);
    H.set(0, SymFunc(1));
    Hs.set(0, SymFunc(1));
    for (int n = 1; n <= T; ++n) {
        H.set(n, SymFunc::h(n));
        Hs.set(n, SymFunc::h(n).scaled(QRat::var_pow(n))); // H(st)
    }
    FormalSeries<SymFunc> C = H * Hs.inverse();
    // C(s,t) = 1 + (1-s) sum_n P_(n) t^n.
    CHECK(C.at(0) == SymFunc(1));
    for (int n = 1; n <= T; ++n)
        CHECK(C.at(n) ==
              SymFunc::hall_littlewood(Partition({n})).scaled(QRat(1) - s));
    // (d/dt) log C = sum_n (1 - s^n) p(n) t^{n-1}.
    FormalSeries<SymFunc> LC = C.log_derivative();
    for (int n = 1; n <= T; ++n)
        CHECK(LC.at(n - 1) == SymFunc::p(n).scaled(QRat(1) - QRat::var_pow(n)));
    // Negative control: corrupting one coefficient must break both readings.
    FormalSeries<SymFunc> bad = C;
    bad.set(2, C.at(2) + SymFunc::monomial(Partition({1, 1})));
    CHECK_FALSE(bad.at(2) ==
                SymFunc::hall_littlewood(Partition({2})).scaled(QRat(1) - s));
    CHECK_FALSE(bad.log_derivative() == LC);
}
