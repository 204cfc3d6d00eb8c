#include "hallwright/classical_hall.hpp"

#include <algorithm>

namespace hallwright {

QRat hall_pieri(const Partition& lambda, const Partition& mu, int r) {
    if (r < 0 || mu.weight() + r != lambda.weight()) return QRat(0);
    int top = std::max(lambda.part(1), mu.part(1));
    // d_j = dim(t^j X  intersect  Y) forced by the quotient type mu;
    // w_j = dim(t^j X  intersect  soc X) = lambda'_{j+1}.
    std::vector<int> d(top + 2, 0), w(top + 2, 0);
    for (int j = 0; j <= top; ++j) {
        for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i)
            d[j] += std::max(lambda.part(i) - j, 0) - std::max(mu.part(i) - j, 0);
        w[j] = lambda.conjugate().part(j + 1);
    }
    for (int j = 0; j <= top; ++j)
        if (d[j] < d[j + 1]) return QRat(0); // mu is not lambda minus a vertical strip
    Poly binoms(Int(1));
    for (int j = 0; j <= top; ++j) {
        Poly b = gauss_binomial(w[j] - w[j + 1], d[j] - d[j + 1]);
        if (b.is_zero()) return QRat(0);
        binoms *= b;
    }
    int exp = 0;
    for (int j = 0; j <= top; ++j) exp += (d[j] - d[j + 1]) * (w[j + 1] - d[j + 1]);
    return QRat(Poly::monomial(1, exp) * binoms);
}

namespace {

// Right multiplication by the elementary class of weight r.
HallRow right_pieri(const HallRow& row, int r, const std::vector<Partition>& targets) {
    HallRow out;
    for (const auto& [kappa, coef] : row)
        for (const auto& lambda : targets) {
            QRat p = hall_pieri(lambda, kappa, r);
            if (!p.is_zero()) out[lambda] += coef * p;
        }
    return out;
}

HallRow times_e_word(const Partition& lambda, const Partition& nu) {
    HallRow row{{lambda, QRat(1)}};
    Partition conj = nu.conjugate();
    int weight = lambda.weight();
    for (int j = 1; j <= conj.length(); ++j) {
        weight += conj.part(j);
        row = right_pieri(row, conj.part(j), partitions_of(weight));
    }
    return row;
}

// Per weight: the expansion of elementary words over the class basis is
// unitriangular against the lexicographically decreasing partition list, so
// the class basis is recovered by back substitution.
struct WeightTable {
    std::vector<Partition> parts;        // lexicographically decreasing
    std::vector<std::vector<QRat>> einv; // u_{parts[i]} = sum_j einv[i][j] E_{parts[j]}
};

const WeightTable& weight_table(int n) {
    static std::map<int, WeightTable> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    WeightTable t;
    t.parts = partitions_of(n);
    size_t k = t.parts.size();
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < k; ++i) index[t.parts[i]] = i;
    std::vector<std::vector<QRat>> T(k, std::vector<QRat>(k, QRat(0)));
    for (size_t i = 0; i < k; ++i) {
        HallRow row = times_e_word(Partition(), t.parts[i]);
        for (const auto& [p, c] : row) T[i][index.at(p)] = c;
        check(T[i][i].is_one(), "elementary word lost its unit diagonal");
        for (size_t j = 0; j < i; ++j)
            check(T[i][j].is_zero(), "elementary word is not triangular");
    }
    t.einv.assign(k, std::vector<QRat>(k, QRat(0)));
    for (size_t j = k; j-- > 0;)
        for (size_t i = j + 1; i-- > 0;) {
            if (i == j) {
                t.einv[i][j] = QRat(1);
                continue;
            }
            QRat s(0);
            for (size_t m = i + 1; m <= j; ++m) s += T[i][m] * t.einv[m][j];
            t.einv[i][j] = -s;
        }
    return cache.emplace(n, std::move(t)).first->second;
}

} // namespace

const HallRow& hall_product_generic(const Partition& lambda, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, HallRow> cache;
    auto key = std::make_pair(lambda, mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const WeightTable& t = weight_table(mu.weight());
    size_t mi = static_cast<size_t>(
        std::find(t.parts.begin(), t.parts.end(), mu) - t.parts.begin());
    HallRow product;
    for (size_t w = mi; w < t.parts.size(); ++w) {
        const QRat& c = t.einv[mi][w];
        if (c.is_zero()) continue;
        for (const auto& [p, coef] : times_e_word(lambda, t.parts[w])) {
            QRat acc = product[p] += c * coef;
            if (acc.is_zero()) product.erase(p);
        }
    }
    for (const auto& [p, coef] : product) {
        (void)p;
        check(coef.is_integer_polynomial(), "Hall structure constant is not polynomial");
    }
    return cache.emplace(std::move(key), std::move(product)).first->second;
}

QRat hall_poly(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return QRat(0);
    const HallRow& row = hall_product_generic(lambda, mu);
    auto it = row.find(nu);
    return it == row.end() ? QRat(0) : it->second;
}

} // namespace hallwright
