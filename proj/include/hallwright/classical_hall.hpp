#pragma once

// Structure constants of the classical Hall algebra (nilpotent loop-quiver
// modules = finite modules over a discrete valuation ring) with the field
// order kept as a formal variable.  The engine computes products of
// elementary classes from exact subspace flag counts and recovers arbitrary
// products by inverting the unitriangular elementary-word expansion, so no
// interpolation is involved.

#include "hallwright/partition.hpp"
#include "hallwright/qrat.hpp"

#include <map>

namespace hallwright {

using HallRow = std::map<Partition, QRat>; // class -> coefficient, zero-free

// Coefficient of u_lambda in u_mu * u_(1^r): submodules of an elementary
// type inside type lambda with quotient of type mu, counted by flag position.
QRat hall_pieri(const Partition& lambda, const Partition& mu, int r);

// Full product u_lambda * u_mu, cached; coefficients are polynomials in q.
const HallRow& hall_product_generic(const Partition& lambda, const Partition& mu);

// Coefficient of u_nu in u_lambda * u_mu.
QRat hall_poly(const Partition& lambda, const Partition& mu, const Partition& nu);

} // namespace hallwright
