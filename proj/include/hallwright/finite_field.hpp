#pragma once

// Small finite fields F_q for q in {2,3,4,5,7,8,9}, with table-driven
// arithmetic.  Elements are encoded as 0..q-1; for prime q the encoding is
// the residue, for prime powers it is the coefficient vector of the residue
// polynomial in the fixed modulus, evaluated at the characteristic:
//   F_4 = F_2[x]/(x^2+x+1),  F_8 = F_2[x]/(x^3+x+1),  F_9 = F_3[x]/(x^2+1).

#include "hallwright/numeric.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hallwright {

using Fq = uint8_t;

class FiniteField {
public:
    explicit FiniteField(int order);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int extension_degree() const { return deg_; }

    Fq add(Fq a, Fq b) const { return add_[a * q_ + b]; }
    Fq sub(Fq a, Fq b) const { return add_[a * q_ + neg_[b]]; }
    Fq mul(Fq a, Fq b) const { return mul_[a * q_ + b]; }
    Fq neg(Fq a) const { return neg_[a]; }
    Fq inv(Fq a) const; // throws at 0
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    // Pointer to the multiplication row of a (q entries): hot-loop helper.
    const Fq* mul_row(Fq a) const { return mul_.data() + a * q_; }
    const Fq* add_row(Fq a) const { return add_.data() + a * q_; }

    static const std::array<int, 7>& supported_orders();

private:
    int q_, p_, deg_;
    std::vector<Fq> add_, mul_, neg_, inv_;
};

// Shared immutable instance per supported order.
const FiniteField& GF(int order);

} // namespace hallwright
