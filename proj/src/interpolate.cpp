#include "hallwright/interpolate.hpp"

#include <sstream>

namespace hallwright {

QRat interpolate_polynomial(const std::vector<std::pair<Int, Rat>>& samples,
                            int degree_bound) {
    if (degree_bound < 0) throw InterpolationError("interpolate: negative degree bound");
    size_t need = static_cast<size_t>(degree_bound) + 1;
    if (samples.size() < need + 1)
        throw InterpolationError(
            "interpolate: need at least degree_bound+2 samples (fit + held-out "
            "validation), got " + std::to_string(samples.size()));
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw InterpolationError("interpolate: duplicate abscissa");

    // Newton divided differences on the fitting prefix.
    std::vector<Rat> x(need), dd(need);
    for (size_t i = 0; i < need; ++i) {
        x[i] = Rat(samples[i].first);
        dd[i] = samples[i].second;
    }
    for (size_t level = 1; level < need; ++level)
        for (size_t i = need - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - level]);

    // Expand the Newton form into monomial coefficients.
    std::vector<Rat> coef(need, Rat(0)); // ascending
    std::vector<Rat> basis{Rat(1)};      // prod (t - x_j), ascending
    for (size_t i = 0; i < need; ++i) {
        for (size_t j = 0; j < basis.size(); ++j) coef[j] += dd[i] * basis[j];
        if (i + 1 < need) {
            basis.push_back(Rat(0));
            for (size_t j = basis.size() - 1; j >= 1; --j)
                basis[j] = basis[j - 1] - x[i] * basis[j];
            basis[0] = -x[i] * basis[0];
        }
    }

    // Assemble as integer num / integer constant den.
    Int den = 1;
    for (const Rat& cv : coef) den = boost::multiprecision::lcm(den, rat_den(cv));
    std::vector<Int> nc(coef.size());
    for (size_t j = 0; j < coef.size(); ++j)
        nc[j] = rat_num(coef[j]) * (den / rat_den(coef[j]));
    QRat result(Poly(std::move(nc)), Poly(den));

    // Held-out validation on every remaining sample.
    for (size_t i = need; i < samples.size(); ++i) {
        Rat got = result.eval(samples[i].first);
        if (got != samples[i].second) {
            std::ostringstream os;
            os << "interpolate: held-out validation failed at x=" << samples[i].first
               << " (expected " << samples[i].second << ", fitted polynomial gives "
               << got << "); degree bound " << degree_bound << " is too small";
            throw InterpolationError(os.str());
        }
    }
    return result;
}

QRat interpolate_polynomial(const std::vector<std::pair<Int, Int>>& samples,
                            int degree_bound) {
    std::vector<std::pair<Int, Rat>> s;
    s.reserve(samples.size());
    for (const auto& [a, b] : samples) s.emplace_back(a, Rat(b));
    return interpolate_polynomial(s, degree_bound);
}

} // namespace hallwright
