#pragma once

// Truncated formal power series over an exact commutative ring R.  R must be
// default-constructible to zero, constructible from int, and support +, -, *
// and is_zero().  Everything is truncated at a fixed order; mixing two
// truncation orders keeps the smaller one.

#include "hallwright/numeric.hpp"

#include <algorithm>
#include <vector>

namespace hallwright {

template <typename R>
class FormalSeries {
public:
    explicit FormalSeries(int trunc) : c_(static_cast<size_t>(trunc) + 1) {
        check(trunc >= 0, "series truncation order must be nonnegative");
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const R& at(int n) const {
        check(n >= 0 && n <= trunc(), "series coefficient out of range");
        return c_[n];
    }
    void set(int n, R v) {
        check(n >= 0 && n <= trunc(), "series coefficient out of range");
        c_[n] = std::move(v);
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.trunc(), b.trunc()));
        for (int n = 0; n <= out.trunc(); ++n) out.c_[n] = a.c_[n] + b.c_[n];
        return out;
    }
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.trunc(), b.trunc()));
        for (int n = 0; n <= out.trunc(); ++n) out.c_[n] = a.c_[n] - b.c_[n];
        return out;
    }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries out(std::min(a.trunc(), b.trunc()));
        for (int n = 0; n <= out.trunc(); ++n)
            for (int k = 0; k <= n; ++k) {
                if (a.c_[k].is_zero() || b.c_[n - k].is_zero()) continue;
                out.c_[n] = out.c_[n] + a.c_[k] * b.c_[n - k];
            }
        return out;
    }

    FormalSeries derivative() const {
        check(trunc() >= 1, "cannot differentiate below order one");
        FormalSeries out(trunc() - 1);
        for (int n = 0; n < trunc(); ++n) out.c_[n] = c_[n + 1] * R(n + 1);
        return out;
    }

    // Multiplicative inverse; requires constant term exactly one.
    FormalSeries inverse() const {
        check(c_[0] == R(1), "series inverse needs constant term one");
        FormalSeries out(trunc());
        out.c_[0] = R(1);
        for (int n = 1; n <= trunc(); ++n) {
            R s{};
            for (int k = 1; k <= n; ++k) {
                if (c_[k].is_zero() || out.c_[n - k].is_zero()) continue;
                s = s + c_[k] * out.c_[n - k];
            }
            out.c_[n] = R{} - s;
        }
        return out;
    }

    // (d/dt) log of a series with constant term one.
    FormalSeries log_derivative() const { return derivative() * inverse(); }

    bool operator==(const FormalSeries& o) const {
        if (trunc() != o.trunc()) return false;
        for (int n = 0; n <= trunc(); ++n)
            if (!(c_[n] == o.c_[n])) return false;
        return true;
    }

private:
    std::vector<R> c_;
};

} // namespace hallwright
