#pragma once

// Exact polynomial interpolation with held-out validation.  Samples beyond
// degree_bound+1 act as validators; a mismatch aborts loudly rather than
// silently returning a wrong polynomial.

#include "hallwright/qrat.hpp"

#include <utility>
#include <vector>

namespace hallwright {

struct InterpolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fits the unique polynomial of degree <= degree_bound through the first
// degree_bound+1 samples (abscissae must be distinct) and checks it against
// every remaining sample exactly.  Throws InterpolationError when there are
// too few samples or a validation sample disagrees.  The result is returned
// as a polynomial-valued QRat (coefficients may be rational in general).
QRat interpolate_polynomial(const std::vector<std::pair<Int, Rat>>& samples,
                            int degree_bound);

// Convenience overload for integer values.
QRat interpolate_polynomial(const std::vector<std::pair<Int, Int>>& samples,
                            int degree_bound);

} // namespace hallwright
