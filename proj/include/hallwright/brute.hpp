#pragma once

// Ground truth over small finite fields: explicit matrix representations,
// exhaustive subrepresentation enumeration, isomorphism classification, and
// Hall-number counting.  Everything here is exact and independent of the
// closed-form combinatorics it is used to validate.
//
// Conventions: vectors are rows, an arrow s->t acts on the right by a
// dims[s] x dims[t] matrix, and composites multiply left to right.

#include "hallwright/cyclicrep.hpp"
#include "hallwright/finite_field.hpp"
#include "hallwright/kronecker.hpp"
#include "hallwright/numeric.hpp"
#include "hallwright/qrat.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace hallwright {

struct QuiverShape {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows; // (source, target)
    bool nilpotent = false;                  // enforce nilpotency around cycles

    // Arrows i -> i+1 mod l+1, listed in source order.
    static QuiverShape cyclic(int l);
    static QuiverShape loop() { return cyclic(0); }
    // Two arrows 0 -> 1 (source 0, sink 1).
    static QuiverShape kronecker();
    QuiverShape reversed() const;

    friend bool operator==(const QuiverShape&, const QuiverShape&) = default;
};

struct FMat {
    int rows = 0, cols = 0;
    std::vector<Fq> a;

    FMat() = default;
    FMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    Fq& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Fq at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static FMat identity(int n);

    friend bool operator==(const FMat&, const FMat&) = default;
};

FMat fmat_mul(const FiniteField& F, const FMat& x, const FMat& y);
int fmat_rank(const FiniteField& F, FMat m); // works on a copy

struct MatrixRep {
    QuiverShape shape;
    int q = 0;
    DimVec dims;
    std::vector<FMat> mats; // one per arrow

    int total_dim() const { return total(dims); }
    void validate() const; // shape compatibility and nilpotency
};

MatrixRep realize(const NilpotentModule& m, int q);
MatrixRep realize(const KroneckerClass& m, int q);
MatrixRep direct_sum_rep(const MatrixRep& x, const MatrixRep& y);

// Inverse of realize, from ranks of path composites (cyclic) or from
// Hom-dimension fingerprints against the classified candidates (Kronecker).
NilpotentModule classify_cyclic(const MatrixRep& x);
KroneckerClass classify_kronecker(const MatrixRep& x);

// dim Hom(x, y) by solving the intertwining equations.
int hom_dim_rep(const MatrixRep& x, const MatrixRep& y);
// Exhaustive isomorphism test (enumerates Hom(x,y) for an invertible member).
bool is_isomorphic(const MatrixRep& x, const MatrixRep& y);

// Row-echelon subspace of F_q^ambient.
struct Subspace {
    int dim = 0, ambient = 0;
    std::vector<Fq> rows; // dim x ambient, reduced row echelon
    std::vector<int> pivots;
};

// All subspaces of F_q^dim, enumerated lazily in echelon form.
void for_each_subspace(int dim, int q, const std::function<void(const Subspace&)>& fn);

struct SubrepResult {
    std::vector<Subspace> spaces; // one per vertex
    MatrixRep sub, quot;
};

// Every tuple of subspaces closed under all arrow maps; guard: total dim <= 8.
std::vector<SubrepResult> enumerate_subreps(const MatrixRep& x);
void for_each_subrep(const MatrixRep& x,
                     const std::function<void(const std::vector<Subspace>&)>& fn);

// Induced representations on a stable tuple of subspaces.
MatrixRep induced_sub(const MatrixRep& x, const std::vector<Subspace>& y);
MatrixRep induced_quot(const MatrixRep& x, const std::vector<Subspace>& y);

// Census of one fixed realization of X: (quotient class, sub class) -> count.
// Memoized; all Hall numbers of the ambient dimension fall out together.
using CyclicCensus = std::map<std::pair<NilpotentModule, NilpotentModule>, Int>;
const CyclicCensus& subrep_census(const NilpotentModule& x, int q);
using KroneckerCensus = std::map<std::pair<KroneckerClass, KroneckerClass>, Int>;
const KroneckerCensus& subrep_census(const KroneckerClass& x, int q);

// F_{MN}^X = #{Y <= X : Y iso N, X/Y iso M} at the given field order.
Int hall_number(const NilpotentModule& m, const NilpotentModule& n, const NilpotentModule& x,
                int q);
Int hall_number(const KroneckerClass& m, const KroneckerClass& n, const KroneckerClass& x,
                int q);

// Extension route: count classes in Ext^1(A,B) by middle term, then invert
// Riedtmann's formula.  Scales past the subspace guard because only the
// extension space of the pair is enumerated.
std::map<NilpotentModule, Int> ext_middles(const NilpotentModule& a, const NilpotentModule& b,
                                           int q);
std::map<NilpotentModule, Int> hall_product_ext(const NilpotentModule& a,
                                                const NilpotentModule& b, int q);

// epsilon := F |Aut M||Aut N||Hom(M,N)| / |Aut X|; ok = exact integrality.
std::pair<Int, bool> riedtmann_check(const NilpotentModule& m, const NilpotentModule& n,
                                     const NilpotentModule& x, int q);
std::pair<Int, bool> riedtmann_check(const KroneckerClass& m, const KroneckerClass& n,
                                     const KroneckerClass& x, int q);
// sum_X epsilon over all X of the matching dimension equals q^dim Ext^1(M,N).
bool riedtmann_sum_check(const NilpotentModule& m, const NilpotentModule& n, int q);
bool riedtmann_sum_check(const KroneckerClass& m, const KroneckerClass& n, int q);

// Hall polynomial by interpolation of brute counts over the supported field
// orders, degree bounded by mono/epi counting, held-out validation included.
QRat hall_polynomial(const NilpotentModule& m, const NilpotentModule& n,
                     const NilpotentModule& x);

// Reflection functor at a sink (+) or source (-) of an acyclic quiver; the
// result lives over the quiver with the arrows at i reversed.
MatrixRep reflect(char direction, int i, const MatrixRep& x);

} // namespace hallwright
