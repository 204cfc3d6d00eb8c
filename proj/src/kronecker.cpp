#include "hallwright/kronecker.hpp"

#include "hallwright/finite_field.hpp"
#include "hallwright/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace hallwright {

namespace {

// Monic polynomial long division over F_q on low-to-high coefficient vectors.
bool poly_divides_fq(const FiniteField& F, const std::vector<int>& d,
                     const std::vector<int>& a) {
    std::vector<int> r = a;
    int dd = static_cast<int>(d.size()) - 1;
    while (static_cast<int>(r.size()) - 1 >= dd) {
        int shift = static_cast<int>(r.size()) - 1 - dd;
        Fq lead = static_cast<Fq>(r.back()); // divisor is monic
        for (int i = 0; i <= dd; ++i)
            r[shift + i] = F.sub(static_cast<Fq>(r[shift + i]),
                                 F.mul(lead, static_cast<Fq>(d[i])));
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        if (r.size() == 1 && r[0] == 0) return true;
    }
    return r.size() == 1 && r[0] == 0;
}

std::vector<std::vector<int>> monic_irreducibles(int d, int q) {
    const FiniteField& F = GF(q);
    std::vector<std::vector<int>> smaller;
    for (int e = 1; e <= d / 2; ++e)
        for (auto& p : monic_irreducibles(e, q)) smaller.push_back(p);
    std::vector<std::vector<int>> out;
    std::vector<int> c(d + 1, 0);
    c[d] = 1;
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (long long code = 0; code < count; ++code) {
        long long t = code;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<int>(t % q);
            t /= q;
        }
        bool irred = true;
        for (const auto& p : smaller)
            if (poly_divides_fq(F, p, c)) {
                irred = false;
                break;
            }
        if (irred) out.push_back(c);
    }
    return out;
}

} // namespace

std::string P1Point::str() const {
    if (inf) return "inf";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        int c = poly[k];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (c != 1 || k == 0) out += std::to_string(c);
        if (k >= 1) out += 't';
        if (k >= 2) out += '^' + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

bool P1Point::operator<(const P1Point& o) const {
    if (inf != o.inf) return inf; // infinity first
    if (poly.size() != o.poly.size()) return poly.size() < o.poly.size();
    // Compare high coefficients first for a stable notation order.
    for (size_t k = poly.size(); k-- > 0;)
        if (poly[k] != o.poly[k]) return poly[k] < o.poly[k];
    return false;
}

std::vector<P1Point> points_of_degree(int d, int q) {
    check(d >= 1, "point degree must be positive");
    std::vector<P1Point> out;
    if (d == 1) out.push_back(P1Point::infinity());
    for (auto& p : monic_irreducibles(d, q)) out.push_back(P1Point{false, p});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> point_degree_counts(int n, int q) {
    std::vector<long long> phi(n + 1, 0);
    for (int d = 1; d <= n; ++d) phi[d] = static_cast<long long>(points_of_degree(d, q).size());
    return phi;
}

DimVec KroneckerIndec::dim() const {
    switch (kind) {
        case preproj: return {n, n + 1};
        case preinj: return {n + 1, n};
        default: return {n * x.degree(), n * x.degree()};
    }
}

std::string KroneckerIndec::str() const {
    switch (kind) {
        case preproj: return "P(" + std::to_string(n) + ")";
        case preinj: return "I(" + std::to_string(n) + ")";
        default: return "R[" + x.str() + "](" + std::to_string(n) + ")";
    }
}

bool KroneckerIndec::operator<(const KroneckerIndec& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == regular) {
        if (!(x == o.x)) return x < o.x;
        return n > o.n;
    }
    return n > o.n;
}

KroneckerClass::KroneckerClass(std::vector<KroneckerIndec> summands)
    : parts_(std::move(summands)) {
    for (const auto& p : parts_) {
        check(p.n >= (p.kind == KroneckerIndec::regular ? 1 : 0), "bad summand index");
        if (p.kind == KroneckerIndec::regular)
            check(p.x.inf || !p.x.poly.empty(), "regular summand needs a point");
    }
    std::sort(parts_.begin(), parts_.end());
}

DimVec KroneckerClass::dim() const {
    DimVec d{0, 0};
    for (const auto& p : parts_) d = add(d, p.dim());
    return d;
}

int KroneckerClass::total_dim() const { return total(dim()); }

long long KroneckerClass::defect() const {
    DimVec d = dim();
    return kronecker_euler(kronecker_delta(), d);
}

KroneckerClass KroneckerClass::direct_sum(const KroneckerClass& other) const {
    std::vector<KroneckerIndec> s = parts_;
    s.insert(s.end(), other.parts_.begin(), other.parts_.end());
    return KroneckerClass(std::move(s));
}

Partition KroneckerClass::regular_partition(const P1Point& x) const {
    std::vector<int> parts;
    for (const auto& p : parts_)
        if (p.kind == KroneckerIndec::regular && p.x == x) parts.push_back(p.n);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

bool KroneckerClass::regular_points_distinct() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i].kind == KroneckerIndec::regular &&
            parts_[i - 1].kind == KroneckerIndec::regular && parts_[i].x == parts_[i - 1].x)
            return false;
    return true;
}

std::string KroneckerClass::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '+';
        out += parts_[i].str();
    }
    return out;
}

KroneckerClass KroneckerClass::parse(const std::string& text, int q) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "0") return zero();
    std::vector<KroneckerIndec> parts;
    size_t pos = 0;
    while (pos < s.size()) {
        // Split one summand at a top-level '+'.
        size_t end = pos;
        int depth = 0;
        while (end < s.size() && (depth > 0 || s[end] != '+')) {
            if (s[end] == '[') ++depth;
            if (s[end] == ']') --depth;
            ++end;
        }
        std::string term = s.substr(pos, end - pos);
        check(!term.empty(), "empty summand in '" + s + "'");
        auto read_paren_int = [&](const std::string& t, size_t at) {
            check(at < t.size() && t[at] == '(' && t.back() == ')',
                  "expected '(count)' in '" + term + "'");
            std::string num = t.substr(at + 1, t.size() - at - 2);
            check(!num.empty() &&
                      num.find_first_not_of("0123456789") == std::string::npos,
                  "bad integer in '" + term + "'");
            return std::stoi(num);
        };
        if (term[0] == 'P' || term[0] == 'I') {
            int n = read_paren_int(term, 1);
            parts.push_back({term[0] == 'P' ? KroneckerIndec::preproj : KroneckerIndec::preinj,
                             n,
                             {}});
        } else if (term[0] == 'R') {
            size_t close = term.find(']');
            check(term.size() > 2 && term[1] == '[' && close != std::string::npos,
                  "expected 'R[point](m)' in '" + term + "'");
            std::string pt = term.substr(2, close - 2);
            int m = read_paren_int(term, close + 1);
            check(m >= 1, "regular multiplicity must be positive");
            P1Point x;
            if (pt == "inf") {
                x = P1Point::infinity();
            } else {
                // Parse a sum of monomials c t^k with field-label coefficients.
                std::vector<int> coeffs;
                size_t p2 = 0;
                while (p2 < pt.size()) {
                    size_t stop = pt.find('+', p2);
                    if (stop == std::string::npos) stop = pt.size();
                    std::string mono = pt.substr(p2, stop - p2);
                    p2 = stop + 1;
                    int coef = 1, expo = 0;
                    size_t tpos = mono.find('t');
                    std::string cs = mono.substr(0, tpos == std::string::npos ? mono.size() : tpos);
                    if (!cs.empty()) {
                        check(cs.find_first_not_of("0123456789") == std::string::npos,
                              "bad coefficient in point '" + pt + "'");
                        coef = std::stoi(cs);
                    }
                    if (tpos != std::string::npos) {
                        expo = 1;
                        if (tpos + 1 < mono.size()) {
                            check(mono[tpos + 1] == '^', "expected '^' in point '" + pt + "'");
                            expo = std::stoi(mono.substr(tpos + 2));
                        }
                    }
                    check(coef >= 0 && coef < q, "coefficient out of range in '" + pt + "'");
                    if (static_cast<int>(coeffs.size()) <= expo) coeffs.resize(expo + 1, 0);
                    check(coeffs[expo] == 0, "repeated power in point '" + pt + "'");
                    coeffs[expo] = coef;
                }
                x = P1Point{false, coeffs};
                check(!x.poly.empty() && x.poly.back() == 1,
                      "point polynomial must be monic: '" + pt + "'");
                auto pts = points_of_degree(x.degree(), q);
                check(std::find(pts.begin(), pts.end(), x) != pts.end(),
                      "'" + pt + "' is not irreducible over F_" + std::to_string(q));
            }
            parts.push_back({KroneckerIndec::regular, m, x});
        } else {
            check(false, "unknown summand '" + term + "'");
        }
        pos = end + (end < s.size() ? 1 : 0);
    }
    return KroneckerClass(std::move(parts));
}

bool KroneckerClass::operator<(const KroneckerClass& o) const {
    return std::lexicographical_compare(parts_.begin(), parts_.end(), o.parts_.begin(),
                                        o.parts_.end());
}

long long kronecker_euler(const DimVec& a, const DimVec& b) {
    check(a.size() == 2 && b.size() == 2, "Kronecker dimension vectors have two entries");
    return static_cast<long long>(a[0]) * b[0] + static_cast<long long>(a[1]) * b[1] -
           2ll * a[0] * b[1];
}

int dim_hom(const KroneckerIndec& a, const KroneckerIndec& b) {
    using K = KroneckerIndec;
    if (a.kind == K::preproj && b.kind == K::preproj) return std::max(0, b.n - a.n + 1);
    if (a.kind == K::preinj && b.kind == K::preinj) return std::max(0, a.n - b.n + 1);
    if (a.kind == K::preproj && b.kind == K::preinj) return a.n + b.n;
    if (a.kind == K::preproj && b.kind == K::regular) return b.n * b.x.degree();
    if (a.kind == K::regular && b.kind == K::preinj) return a.n * a.x.degree();
    if (a.kind == K::regular && b.kind == K::regular)
        return a.x == b.x ? std::min(a.n, b.n) * a.x.degree() : 0;
    return 0; // Hom(I,P) = Hom(I,R) = Hom(R,P) = 0
}

int dim_hom(const KroneckerClass& a, const KroneckerClass& b) {
    int d = 0;
    for (const auto& s : a.summands())
        for (const auto& t : b.summands()) d += dim_hom(s, t);
    return d;
}

int dim_end(const KroneckerClass& m) { return dim_hom(m, m); }

int dim_ext(const KroneckerClass& a, const KroneckerClass& b) {
    long long e = dim_hom(a, b) - kronecker_euler(a.dim(), b.dim());
    check(e >= 0, "negative Ext dimension");
    return static_cast<int>(e);
}

Poly aut_order(const KroneckerClass& m) {
    std::map<KroneckerIndec, int> mult;
    for (const auto& p : m.summands()) ++mult[p];
    int sq = 0;
    Poly out(Int(1));
    for (const auto& [ind, k] : mult) {
        int e = ind.kind == KroneckerIndec::regular ? ind.x.degree() : 1;
        sq += k * k * e;
        out = out * gl_order_poly(k).subst_power(e);
    }
    int e = dim_end(m) - sq;
    check(e >= 0, "End dimension below semisimple rank");
    return out * Poly::monomial(1, e);
}

std::vector<KroneckerIndec> kronecker_indecs_of_dim(const DimVec& d, int q) {
    check(d.size() == 2, "Kronecker dimension vectors have two entries");
    std::vector<KroneckerIndec> out;
    if (d[0] >= 0 && d[1] == d[0] + 1) out.push_back({KroneckerIndec::preproj, d[0], {}});
    if (d[1] >= 0 && d[0] == d[1] + 1) out.push_back({KroneckerIndec::preinj, d[1], {}});
    if (d[0] == d[1] && d[0] >= 1)
        for (int e = 1; e <= d[0]; ++e)
            if (d[0] % e == 0)
                for (const auto& x : points_of_degree(e, q))
                    out.push_back({KroneckerIndec::regular, d[0] / e, x});
    return out;
}

namespace {

void classes_rec(const DimVec& remaining, const std::vector<KroneckerIndec>& pool, size_t from,
                 std::vector<KroneckerIndec>& chosen, std::vector<KroneckerClass>& out) {
    if (remaining[0] == 0 && remaining[1] == 0) {
        out.emplace_back(chosen);
        return;
    }
    for (size_t k = from; k < pool.size(); ++k) {
        DimVec pd = pool[k].dim();
        if (pd[0] > remaining[0] || pd[1] > remaining[1]) continue;
        chosen.push_back(pool[k]);
        classes_rec(sub(remaining, pd), pool, k, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<KroneckerClass> kronecker_classes_of_dim(const DimVec& d, int q) {
    check(d.size() == 2 && d[0] >= 0 && d[1] >= 0, "bad dimension vector");
    std::vector<KroneckerIndec> pool;
    for (int a = 0; a <= d[0]; ++a)
        for (int b = 0; b <= d[1]; ++b) {
            if (a == 0 && b == 0) continue;
            for (auto& ind : kronecker_indecs_of_dim({a, b}, q)) pool.push_back(ind);
        }
    std::sort(pool.begin(), pool.end());
    std::vector<KroneckerClass> out;
    std::vector<KroneckerIndec> chosen;
    classes_rec(d, pool, 0, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hallwright
