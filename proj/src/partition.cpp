#include "hallwright/partition.hpp"

#include <algorithm>
#include <sstream>

namespace hallwright {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        check(parts_[i] >= 1, "Partition: parts must be positive");
        check(i == 0 || parts_[i - 1] >= parts_[i],
              "Partition: parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

Int Partition::n_stat() const {
    Int n = 0;
    for (size_t i = 0; i < parts_.size(); ++i) n += Int(i) * parts_[i];
    return n;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int i = 1; i <= (parts_.empty() ? 0 : parts_[0]); ++i) {
        int cnt = 0;
        for (int p : parts_) cnt += (p >= i);
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

int Partition::multiplicity(int v) const {
    int m = 0;
    for (int p : parts_) m += (p == v);
    return m;
}

bool Partition::operator<(const Partition& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return parts_ < o.parts_;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition cup(const Partition& a, const Partition& b) {
    std::vector<int> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    std::sort(out.rbegin(), out.rend());
    return Partition(std::move(out));
}

bool rev_lex_less(const Partition& a, const Partition& b) {
    check(a.weight() == b.weight(), "rev_lex_less: weights must agree");
    int n = std::max(a.length(), b.length());
    for (int i = 1; i <= n; ++i) {
        if (a.part(i) != b.part(i)) return a.part(i) > b.part(i);
    }
    return false;
}

bool dominates(const Partition& mu, const Partition& lambda) {
    check(mu.weight() == lambda.weight(), "dominates: weights must agree");
    int acc_mu = 0, acc_la = 0;
    int n = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= n; ++i) {
        acc_mu += mu.part(i);
        acc_la += lambda.part(i);
        if (acc_la > acc_mu) return false;
    }
    return true;
}

namespace {
void gen_parts(int remaining, int max_part, std::vector<int>& cur,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_parts(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int n) {
    check(n >= 0, "partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_parts(n, n == 0 ? 1 : n, cur, out);
    return out;
}

std::vector<Partition> partitions_upto(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto pk = partitions_of(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

} // namespace hallwright
