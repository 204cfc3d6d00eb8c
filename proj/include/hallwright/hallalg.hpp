#pragma once

// The Hall algebra of a fixed quiver context: formal QRat-combinations of
// iso-classes with the counting product [M][N] = sum_X F_{MN}^X [X], Green's
// comultiplication, the bilinear form, the adjoint operators e_i', the
// central generators z_m, the maps psi from symmetric functions, and
// composition-subalgebra rank machinery.
//
// Two coefficient modes share one element type: generic (structure constants
// are exact rational functions of q) and specialized (q fixed, structure
// constants counted over F_q).  All arithmetic is exact.

#include "hallwright/brute.hpp"
#include "hallwright/classical_hall.hpp"
#include "hallwright/cyclicrep.hpp"
#include "hallwright/kronecker.hpp"
#include "hallwright/qrat.hpp"
#include "hallwright/symfunc.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hallwright {

// One basis vector: a nilpotent cyclic-quiver module or a Kronecker class.
using IsoClass = std::variant<NilpotentModule, KroneckerClass>;

std::string iso_str(const IsoClass& m);
DimVec iso_dim(const IsoClass& m);
int iso_total_dim(const IsoClass& m);
Poly iso_aut(const IsoClass& m);
int iso_end_dim(const IsoClass& m);

struct HallContext {
    enum class Kind { cyclic, kronecker };
    Kind kind = Kind::cyclic;
    int l = 0;  // cyclic: vertices 0..l
    int d = 1;  // loop only: the algebra H_d, structure constants at q^d
    int q0 = 0; // 0 = generic coefficients, otherwise the field order

    bool generic() const { return q0 == 0; }
    int vertices() const { return kind == Kind::cyclic ? l + 1 : 2; }

    static HallContext loop_generic(int d = 1) { return {Kind::cyclic, 0, d, 0}; }
    static HallContext cyclic_generic(int l) { return {Kind::cyclic, l, 1, 0}; }
    static HallContext cyclic_at(int l, int q0) { return {Kind::cyclic, l, 1, q0}; }
    static HallContext kronecker_at(int q0) { return {Kind::kronecker, 0, 1, q0}; }

    friend bool operator==(const HallContext&, const HallContext&) = default;
};

// Formal sum; zero coefficients are never stored.
class HallElement {
public:
    HallElement() = default;

    const std::map<IsoClass, QRat>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    QRat coeff(const IsoClass& m) const;
    // Dimension vector when nonzero and homogeneous, otherwise nullopt.
    std::optional<DimVec> degree() const;

    void add(const IsoClass& m, const QRat& c);
    HallElement scaled(const QRat& c) const;

    HallElement& operator+=(const HallElement& o);
    HallElement& operator-=(const HallElement& o);
    friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
    friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
    friend bool operator==(const HallElement&, const HallElement&) = default;

    std::string str() const;

private:
    std::map<IsoClass, QRat> c_;
};

// Element of H (x) H, the target of the comultiplication.
class TensorElement {
public:
    TensorElement() = default;

    const std::map<std::pair<IsoClass, IsoClass>, QRat>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    QRat coeff(const IsoClass& m, const IsoClass& n) const;

    void add(const IsoClass& m, const IsoClass& n, const QRat& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

    std::string str() const;

private:
    std::map<std::pair<IsoClass, IsoClass>, QRat> c_;
};

struct CentralityReport {
    bool pass = true;
    long long checked = 0;
    std::string witness;     // first module with a nonzero commutator
    HallElement commutator;  // its value
};

class HallAlgebra {
public:
    explicit HallAlgebra(HallContext ctx);

    const HallContext& context() const { return ctx_; }

    IsoClass zero_class() const;
    IsoClass simple_class(int vertex) const;
    HallElement unit() const { return basis(zero_class()); }
    HallElement simple(int vertex) const { return basis(simple_class(vertex)); }
    HallElement basis(const IsoClass& m, const QRat& c = QRat(1)) const;
    // Module notation of the context ("S0(2)+S1(1)" / "P(1)+R[inf](2)"; "0").
    HallElement parse(const std::string& text) const;

    std::vector<IsoClass> classes_of_dim(const DimVec& d) const;

    HallElement mul(const HallElement& x, const HallElement& y) const;
    TensorElement comultiply(const HallElement& x) const;
    QRat form(const HallElement& x, const HallElement& y) const;
    // {t, y (x) z} with t in H (x) H.
    QRat form_tensor(const TensorElement& t, const HallElement& y,
                     const HallElement& z) const;
    // Adjoint of left multiplication by [S_i]: {e_i'(x), y} = {x, [S_i] y}.
    HallElement e_prime(int vertex, const HallElement& x) const;

    // z_m = sum over dim M = m*delta, soc M square-free, of
    // (-1)^{dim End M} |Aut M| [M].  Cyclic contexts only.
    HallElement z_generator(int m) const;
    CentralityReport verify_central(const HallElement& z, int dim_bound) const;
    // Dimension of the space of elements of the given degree commuting with
    // every [M] of total dimension <= dim_bound.  Specialized mode.
    int centre_dimension(const DimVec& degree, int dim_bound) const;

    // psi_d(P_lambda(X; q^{-d})) = q^{n(lambda) d} u_d(lambda); loop context.
    HallElement psi_d(const SymFunc& f) const;
    // psi^{(S_i)}(P_lambda(X; q^{-1})) = q^{n(lambda)} [sum_t S_i(lambda_t (l+1))].
    HallElement psi_S(const SymFunc& f, int vertex) const;

    // Rank of the span of all words in the simples of the given degree,
    // in the iso-class basis.  Specialized mode.
    int composition_graded_dim(const DimVec& degree) const;
    // Membership of a homogeneous element in that span.  Specialized mode.
    bool in_composition(const HallElement& x) const;

    nlohmann::ordered_json to_json(const HallElement& x) const;

private:
    QRat lift(const Poly& p) const;  // generic: q -> q^d; specialized: eval at q0
    QRat hl_coeff(const QRat& c, long long nstat) const;
    const HallElement& basis_product(const IsoClass& a, const IsoClass& b) const;
    HallElement product_row(const IsoClass& a, const IsoClass& b) const;
    TensorElement comultiply_basis(const IsoClass& x) const;
    std::vector<DimVec> dim_vectors_upto(int bound) const;
    // Row vectors of all degree-words over the class basis of that degree.
    std::vector<std::vector<Rat>> word_matrix(const DimVec& degree,
                                              std::vector<IsoClass>& basis_out) const;

    HallContext ctx_;
    mutable std::map<std::pair<IsoClass, IsoClass>, HallElement> row_cache_;
};

} // namespace hallwright
