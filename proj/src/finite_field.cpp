#include "hallwright/finite_field.hpp"

#include <map>
#include <mutex>

namespace hallwright {

namespace {

// Fixed irreducible moduli, ascending coefficients (constant first),
// leading 1 omitted: x^2+x+1 -> {1,1}; x^3+x+1 -> {1,1,0}; x^2+1 -> {1,0}.
std::vector<int> modulus_for(int q) {
    switch (q) {
        case 4: return {1, 1};
        case 8: return {1, 1, 0};
        case 9: return {1, 0};
        default: return {};
    }
}

} // namespace

FiniteField::FiniteField(int order) : q_(order) {
    switch (order) {
        case 2: case 3: case 5: case 7: p_ = order; deg_ = 1; break;
        case 4: p_ = 2; deg_ = 2; break;
        case 8: p_ = 2; deg_ = 3; break;
        case 9: p_ = 3; deg_ = 2; break;
        default: check(false, "FiniteField: unsupported order " + std::to_string(order));
    }
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);

    auto decode = [&](int e) { // element -> coefficient vector, length deg_
        std::vector<int> c(deg_);
        for (int i = 0; i < deg_; ++i) {
            c[i] = e % p_;
            e /= p_;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int e = 0;
        for (int i = deg_ - 1; i >= 0; --i) e = e * p_ + c[i];
        return e;
    };
    std::vector<int> mod = modulus_for(q_);

    for (int a = 0; a < q_; ++a) {
        auto ca = decode(a);
        for (int b = 0; b < q_; ++b) {
            auto cb = decode(b);
            std::vector<int> s(deg_);
            for (int i = 0; i < deg_; ++i) s[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = static_cast<Fq>(encode(s));

            // Polynomial product reduced by the modulus.
            std::vector<int> prod(2 * deg_ - 1, 0);
            for (int i = 0; i < deg_; ++i)
                for (int j = 0; j < deg_; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
            for (int d = 2 * deg_ - 2; d >= deg_; --d) {
                int lead = prod[d];
                if (lead == 0) continue;
                prod[d] = 0;
                // x^d = -mod(x) * x^{d-deg}
                for (int i = 0; i < deg_; ++i)
                    prod[d - deg_ + i] =
                        ((prod[d - deg_ + i] - lead * mod[i]) % p_ + p_ * p_) % p_;
            }
            prod.resize(deg_);
            mul_[a * q_ + b] = static_cast<Fq>(encode(prod));
        }
        std::vector<int> n(deg_);
        for (int i = 0; i < deg_; ++i) n[i] = (p_ - ca[i]) % p_;
        neg_[a] = static_cast<Fq>(encode(n));
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Fq>(b);
}

Fq FiniteField::inv(Fq a) const {
    check(a != 0, "FiniteField::inv: zero has no inverse");
    return inv_[a];
}

const std::array<int, 7>& FiniteField::supported_orders() {
    static const std::array<int, 7> orders{2, 3, 4, 5, 7, 8, 9};
    return orders;
}

const FiniteField& GF(int order) {
    static std::map<int, FiniteField> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, FiniteField(order)).first;
    return it->second;
}

} // namespace hallwright
