#include "hallwright/cyclicrep.hpp"

#include "hallwright/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace hallwright {

int total(const DimVec& d) { return std::accumulate(d.begin(), d.end(), 0); }

DimVec add(const DimVec& a, const DimVec& b) {
    check(a.size() == b.size(), "dimension vector size mismatch");
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVec sub(const DimVec& a, const DimVec& b) {
    check(a.size() == b.size(), "dimension vector size mismatch");
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

std::string dimvec_str(const DimVec& d) {
    std::string out = "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out + ")";
}

CyclicQuiver::CyclicQuiver(int l) : n_(l + 1) { check(l >= 0, "negative quiver rank"); }

long long CyclicQuiver::euler_form(const DimVec& a, const DimVec& b) const {
    check(static_cast<int>(a.size()) == n_ && static_cast<int>(b.size()) == n_,
          "dimension vector size mismatch");
    long long v = 0;
    for (int i = 0; i < n_; ++i) v += static_cast<long long>(a[i]) * (b[i] - b[(i + 1) % n_]);
    return v;
}

bool segment_less(const Segment& a, const Segment& b) {
    if (a.len != b.len) return a.len > b.len;
    return a.top < b.top;
}

NilpotentModule::NilpotentModule(int vertices, std::vector<Segment> segments)
    : n_(vertices), segs_(std::move(segments)) {
    check(n_ >= 1, "module needs at least one vertex");
    for (auto& s : segs_) {
        check(s.len >= 1, "segment length must be positive");
        check(s.top >= 0 && s.top < n_, "segment top out of range");
    }
    std::sort(segs_.begin(), segs_.end(), segment_less);
}

DimVec NilpotentModule::dim() const {
    DimVec d(n_, 0);
    for (const auto& s : segs_)
        for (int t = 0; t < s.len; ++t) ++d[(s.top + t) % n_];
    return d;
}

int NilpotentModule::total_dim() const {
    int t = 0;
    for (const auto& s : segs_) t += s.len;
    return t;
}

Partition NilpotentModule::loewy() const {
    std::vector<int> parts;
    for (const auto& s : segs_) parts.push_back(s.len);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::vector<int> NilpotentModule::socle_mult() const {
    std::vector<int> m(n_, 0);
    for (const auto& s : segs_) ++m[s.socle(n_)];
    return m;
}

std::vector<int> NilpotentModule::top_mult() const {
    std::vector<int> m(n_, 0);
    for (const auto& s : segs_) ++m[s.top];
    return m;
}

bool NilpotentModule::socle_square_free() const {
    for (int m : socle_mult())
        if (m > 1) return false;
    return true;
}

bool NilpotentModule::top_square_free() const {
    for (int m : top_mult())
        if (m > 1) return false;
    return true;
}

NilpotentModule NilpotentModule::tau() const {
    std::vector<Segment> segs = segs_;
    for (auto& s : segs) s.top = (s.top + 1) % n_;
    return NilpotentModule(n_, std::move(segs));
}

NilpotentModule NilpotentModule::direct_sum(const NilpotentModule& other) const {
    check(n_ == other.n_, "direct sum across different quivers");
    std::vector<Segment> segs = segs_;
    segs.insert(segs.end(), other.segs_.begin(), other.segs_.end());
    return NilpotentModule(n_, std::move(segs));
}

std::string NilpotentModule::str() const {
    if (segs_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < segs_.size(); ++i) {
        if (i) out += '+';
        out += 'S';
        out += std::to_string(segs_[i].top);
        out += '(';
        out += std::to_string(segs_[i].len);
        out += ')';
    }
    return out;
}

NilpotentModule NilpotentModule::parse(int vertices, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "0") return zero(vertices);
    std::vector<Segment> segs;
    size_t pos = 0;
    auto read_int = [&](const char* what) {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        check(pos > start, std::string("expected ") + what + " at position " +
                               std::to_string(start) + " in '" + s + "'");
        return std::stoi(s.substr(start, pos - start));
    };
    while (true) {
        check(pos < s.size() && s[pos] == 'S',
              "expected 'S' at position " + std::to_string(pos) + " in '" + s + "'");
        ++pos;
        int top = read_int("vertex index");
        check(pos < s.size() && s[pos] == '(',
              "expected '(' at position " + std::to_string(pos) + " in '" + s + "'");
        ++pos;
        int len = read_int("segment length");
        check(pos < s.size() && s[pos] == ')',
              "expected ')' at position " + std::to_string(pos) + " in '" + s + "'");
        ++pos;
        check(top >= 0 && top < vertices, "vertex index out of range in '" + s + "'");
        segs.push_back({top, len});
        if (pos == s.size()) break;
        check(s[pos] == '+',
              "expected '+' at position " + std::to_string(pos) + " in '" + s + "'");
        ++pos;
    }
    return NilpotentModule(vertices, std::move(segs));
}

bool NilpotentModule::operator<(const NilpotentModule& o) const {
    check(n_ == o.n_, "comparing modules over different quivers");
    return std::lexicographical_compare(segs_.begin(), segs_.end(), o.segs_.begin(),
                                        o.segs_.end(), [](const Segment& a, const Segment& b) {
                                            return a.len != b.len ? a.len > b.len
                                                                  : a.top < b.top;
                                        });
}

namespace {

int dim_hom_segments(int n, const Segment& s, const Segment& t) {
    // Maps S_i(a) -> S_j(b) send the top into the vertex-i layers of the
    // target that die under x^a; one dimension per admissible depth c.
    int bound = std::min(s.len, t.len);
    int res = ((t.len + t.top - s.top) % n + n) % n;
    if (res == 0) res = n;
    return res > bound ? 0 : (bound - res) / n + 1;
}

} // namespace

int dim_hom(const NilpotentModule& m, const NilpotentModule& n) {
    check(m.vertices() == n.vertices(), "Hom across different quivers");
    int d = 0;
    for (const auto& s : m.segments())
        for (const auto& t : n.segments()) d += dim_hom_segments(m.vertices(), s, t);
    return d;
}

long long euler_form(const NilpotentModule& m, const NilpotentModule& n) {
    check(m.vertices() == n.vertices(), "Euler form across different quivers");
    return CyclicQuiver(m.vertices() - 1).euler_form(m.dim(), n.dim());
}

int dim_ext(const NilpotentModule& m, const NilpotentModule& n) {
    long long e = dim_hom(m, n) - euler_form(m, n);
    check(e >= 0, "negative Ext dimension");
    return static_cast<int>(e);
}

int dim_end(const NilpotentModule& m) { return dim_hom(m, m); }

Poly aut_order(const NilpotentModule& m) {
    // M = sum of distinct indecomposables with multiplicities m_k; each
    // End(segment) is local with residue field k, so
    // |Aut M| = q^(dim End M - sum m_k^2) * prod |GL_{m_k}(q)|.
    std::map<std::pair<int, int>, int> mult;
    for (const auto& s : m.segments()) ++mult[{s.len, s.top}];
    int sq = 0;
    Poly out(Int(1));
    for (const auto& [seg, k] : mult) {
        (void)seg;
        sq += k * k;
        out = out * gl_order_poly(k);
    }
    int e = dim_end(m) - sq;
    check(e >= 0, "End dimension below semisimple rank");
    return out * Poly::monomial(1, e);
}

namespace {

void enumerate_rec(int n, const DimVec& remaining, const std::vector<Segment>& pool,
                   size_t from, std::vector<Segment>& chosen,
                   std::vector<NilpotentModule>& out) {
    if (total(remaining) == 0) {
        out.emplace_back(n, chosen);
        return;
    }
    for (size_t k = from; k < pool.size(); ++k) {
        const Segment& s = pool[k];
        DimVec next = remaining;
        bool fits = true;
        for (int t = 0; t < s.len && fits; ++t) {
            int v = (s.top + t) % n;
            if (--next[v] < 0) fits = false;
        }
        if (!fits) continue;
        chosen.push_back(s);
        enumerate_rec(n, next, pool, k, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<NilpotentModule> modules_of_dim(int vertices, const DimVec& d) {
    check(static_cast<int>(d.size()) == vertices, "dimension vector size mismatch");
    for (int x : d) check(x >= 0, "negative dimension");
    std::vector<Segment> pool;
    for (int len = 1; len <= total(d); ++len)
        for (int top = 0; top < vertices; ++top) {
            Segment s{top, len};
            DimVec sd(vertices, 0);
            for (int t = 0; t < len; ++t) ++sd[(top + t) % vertices];
            bool fits = true;
            for (int v = 0; v < vertices; ++v) fits = fits && sd[v] <= d[v];
            if (fits) pool.push_back(s);
        }
    std::sort(pool.begin(), pool.end(), segment_less);
    std::vector<NilpotentModule> out;
    std::vector<Segment> chosen;
    enumerate_rec(vertices, d, pool, 0, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NilpotentModule> z_support(int m, int l) {
    check(m >= 1, "z_support needs m >= 1");
    DimVec d(l + 1, m);
    std::vector<NilpotentModule> out;
    for (auto& mod : modules_of_dim(l + 1, d))
        if (mod.socle_square_free()) out.push_back(mod);
    return out;
}

NilpotentModule Z_module(const Partition& pi, int l) {
    std::vector<Segment> segs;
    for (int t = 1; t <= pi.length(); ++t)
        for (int i = 0; i <= l; ++i) segs.push_back({i, pi.part(t)});
    return NilpotentModule(l + 1, std::move(segs));
}

} // namespace hallwright
