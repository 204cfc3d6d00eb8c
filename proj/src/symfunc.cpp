#include "hallwright/symfunc.hpp"

#include <algorithm>
#include <numeric>

namespace hallwright {

SymFunc::SymFunc(const QRat& k) {
    if (!k.is_zero()) c_[Partition()] = k;
}

void SymFunc::insert_term(const Partition& mu, const QRat& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c_.emplace(mu, v);
    if (fresh) return;
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

SymFunc SymFunc::monomial(const Partition& lambda) {
    SymFunc f;
    f.c_[lambda] = QRat(1);
    return f;
}

SymFunc SymFunc::e(int n) {
    check(n >= 0, "e(n) needs n >= 0");
    return monomial(Partition(std::vector<int>(n, 1)));
}

SymFunc SymFunc::h(int n) {
    check(n >= 0, "h(n) needs n >= 0");
    SymFunc f;
    for (const auto& mu : partitions_of(n)) f.c_[mu] = QRat(1);
    return f;
}

SymFunc SymFunc::p(int n) {
    check(n >= 1, "p(n) needs n >= 1");
    return monomial(Partition({n}));
}

QRat SymFunc::coeff(const Partition& mu) const {
    auto it = c_.find(mu);
    return it == c_.end() ? QRat(0) : it->second;
}

SymFunc SymFunc::scaled(const QRat& k) const {
    SymFunc f;
    if (k.is_zero()) return f;
    for (const auto& [mu, v] : c_) f.c_[mu] = v * k;
    return f;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    SymFunc f = a;
    for (const auto& [mu, v] : b.c_) f.insert_term(mu, v);
    return f;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
    SymFunc f = a;
    for (const auto& [mu, v] : b.c_) f.insert_term(mu, -v);
    return f;
}

namespace {

// Coefficient of m_nu in m_lambda m_mu: arrangements alpha of lambda (padded
// with zeros to the length of nu) such that nu - alpha rearranges to mu.
long long monomial_product_coeff(const Partition& lambda, const Partition& mu,
                                 const Partition& nu) {
    int len = nu.length();
    if (lambda.length() > len || mu.length() > len) return 0;
    std::vector<int> alpha(len, 0);
    for (int i = 1; i <= lambda.length(); ++i) alpha[i - 1] = lambda.part(i);
    std::sort(alpha.begin(), alpha.end());
    long long count = 0;
    do {
        std::vector<int> beta(len);
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) {
            beta[i] = nu.part(i + 1) - alpha[i];
            ok = beta[i] >= 0;
        }
        if (!ok) continue;
        std::sort(beta.begin(), beta.end(), std::greater<>());
        while (!beta.empty() && beta.back() == 0) beta.pop_back();
        if (Partition(std::move(beta)) == mu) ++count;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return count;
}

const std::map<Partition, long long>& monomial_product(const Partition& lambda,
                                                       const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> cache;
    auto key = std::make_pair(lambda, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<Partition, long long> out;
    for (const auto& nu : partitions_of(lambda.weight() + mu.weight())) {
        if (nu.length() > lambda.length() + mu.length()) continue;
        long long c = monomial_product_coeff(lambda, mu, nu);
        if (c != 0) out[nu] = c;
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc f;
    for (const auto& [la, ca] : a.c_)
        for (const auto& [mu, cb] : b.c_) {
            QRat cc = ca * cb;
            for (const auto& [nu, n] : monomial_product(la, mu))
                f.insert_term(nu, cc * QRat(Int(n)));
        }
    return f;
}

long long kostka_number(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight()) return 0;
    int rows = shape.length(), vals = content.length();
    std::vector<std::vector<int>> fill(rows + 1);
    for (int r = 1; r <= rows; ++r) fill[r].assign(shape.part(r) + 1, 0);
    std::vector<int> used(vals + 1, 0);
    long long count = 0;
    // Fill row by row, right to left: both the right and upper neighbours
    // are already placed when a cell is visited.
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r > rows) {
            ++count;
            return;
        }
        if (c == 0) {
            self(self, r + 1, shape.part(r + 1));
            return;
        }
        for (int v = r; v <= vals; ++v) { // column strictness forces v >= row
            if (used[v] == content.part(v)) continue;
            if (c < shape.part(r) && fill[r][c + 1] < v) continue;
            if (r > 1 && c <= shape.part(r - 1) && fill[r - 1][c] >= v) continue;
            fill[r][c] = v;
            ++used[v];
            self(self, r, c - 1);
            --used[v];
            fill[r][c] = 0;
        }
    };
    rec(rec, 1, shape.part(1));
    return count;
}

namespace {

// Expansion of prod_{i<j} (x_i - s x_j) as exponent vector -> coefficient,
// cached per variable count.
using ExpTerms = std::map<std::vector<int>, Poly>;

const ExpTerms& cross_terms(int nvars) {
    static std::map<int, ExpTerms> cache;
    auto it = cache.find(nvars);
    if (it != cache.end()) return it->second;
    ExpTerms terms{{std::vector<int>(nvars, 0), Poly(Int(1))}};
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            ExpTerms next;
            for (const auto& [exp, coef] : terms) {
                std::vector<int> pick = exp;
                ++pick[i];
                auto [iti, fresh1] = next.emplace(std::move(pick), coef);
                if (!fresh1) iti->second += coef;
                std::vector<int> other = exp;
                ++other[j];
                Poly scoef = Poly::monomial(-1, 1) * coef; // -s
                auto [itj, fresh2] = next.emplace(std::move(other), std::move(scoef));
                if (!fresh2) itj->second += Poly::monomial(-1, 1) * coef;
            }
            terms = std::move(next);
        }
    return cache.emplace(nvars, std::move(terms)).first->second;
}

// v_m(s) = prod_{k=1..m} (1-s^k)/(1-s), the stabilizer factor.
Poly v_factor(int m) {
    Poly out(Int(1));
    for (int k = 1; k <= m; ++k) {
        std::vector<Int> geom(k, Int(1)); // 1 + s + ... + s^{k-1}
        out *= Poly(std::move(geom));
    }
    return out;
}

} // namespace

SymFunc SymFunc::hall_littlewood_nvars(const Partition& lambda, int nvars) {
    check(nvars >= std::max(lambda.length(), 1), "not enough variables");
    // Antisymmetrize x^lambda prod_{i<j}(x_i - s x_j); each exponent vector
    // with distinct entries contributes a signed Schur term.
    std::map<Partition, QRat> schur;
    for (const auto& [exp, coef] : cross_terms(nvars)) {
        std::vector<int> full(nvars);
        for (int i = 0; i < nvars; ++i) full[i] = exp[i] + lambda.part(i + 1);
        std::vector<int> sorted = full;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        // Sign of the sorting permutation via inversion count.
        int inv = 0;
        for (int i = 0; i < nvars; ++i)
            for (int j = i + 1; j < nvars; ++j)
                if (full[i] < full[j]) ++inv;
        std::vector<int> beta(nvars);
        for (int i = 0; i < nvars; ++i) beta[i] = sorted[i] - (nvars - 1 - i);
        while (!beta.empty() && beta.back() == 0) beta.pop_back();
        QRat term = QRat(coef);
        if (inv % 2) term = -term;
        Partition bp(std::move(beta));
        auto [it, fresh] = schur.emplace(bp, term);
        if (!fresh) it->second += term;
    }
    // Schur -> monomial via Kostka counts, then divide by the stabilizer.
    Poly vden = v_factor(nvars - lambda.length());
    for (int part = 1; part <= lambda.part(1); ++part)
        vden *= v_factor(lambda.multiplicity(part));
    SymFunc out;
    for (const auto& [bp, cs] : schur) {
        if (cs.is_zero()) continue;
        for (const auto& mu : partitions_of(lambda.weight())) {
            long long k = kostka_number(bp, mu);
            if (k != 0) out.insert_term(mu, cs * QRat(Poly(Int(k)), vden));
        }
    }
    for (const auto& [mu, v] : out.c_) {
        (void)mu;
        check(v.is_integer_polynomial(), "Hall-Littlewood coefficient not in Z[s]");
    }
    return out;
}

const SymFunc& SymFunc::hall_littlewood(const Partition& lambda) {
    static std::map<Partition, SymFunc> cache;
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    SymFunc f = hall_littlewood_nvars(lambda, std::max(lambda.weight(), 1));
    return cache.emplace(lambda, std::move(f)).first->second;
}

std::map<Partition, QRat> SymFunc::in_hl_basis() const {
    // P_lambda = m_lambda + (dominance-lower terms): strip leading terms in
    // decreasing lexicographic order within each weight.
    std::map<Partition, QRat> out;
    SymFunc rest = *this;
    while (!rest.is_zero()) {
        // Highest weight, then lexicographically largest partition.
        Partition top = rest.c_.rbegin()->first;
        for (const auto& [mu, v] : rest.c_) {
            (void)v;
            if (mu.weight() == top.weight() && !(mu < top)) top = mu;
        }
        QRat c = rest.coeff(top);
        out[top] = c;
        rest -= hall_littlewood(top).scaled(c);
        check(rest.coeff(top).is_zero(), "basis change failed to eliminate a term");
    }
    return out;
}

std::string SymFunc::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.str("s") + ")*m" + it->first.str();
    }
    return out;
}

} // namespace hallwright
