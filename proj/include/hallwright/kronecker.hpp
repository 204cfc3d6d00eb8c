#pragma once

// Iso-class bookkeeping for the Kronecker quiver 1 => 2 (two arrows 1 -> 2).
// Indecomposables: preprojectives P_n of dimension vector (n, n+1),
// preinjectives I_n of dimension vector (n+1, n), and regulars R_x(m) indexed
// by a point x of the projective line over F_q (infinity or a monic
// irreducible polynomial) with dimension vector m*deg(x)*(1,1).

#include "hallwright/cyclicrep.hpp"
#include "hallwright/partition.hpp"
#include "hallwright/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace hallwright {

struct P1Point {
    bool inf = false;
    std::vector<int> poly; // monic irreducible, coefficients low-to-high incl. leading 1

    int degree() const { return inf ? 1 : static_cast<int>(poly.size()) - 1; }
    std::string str() const; // "inf" or e.g. "t^2+t+1"
    static P1Point infinity() { return {true, {}}; }

    friend bool operator==(const P1Point&, const P1Point&) = default;
    bool operator<(const P1Point& o) const;
};

// All points of the given degree over F_q (degree 1 includes infinity).
std::vector<P1Point> points_of_degree(int d, int q);
// Number of points of each degree 1..n (phi in the point-count lemma).
std::vector<long long> point_degree_counts(int n, int q);

// One indecomposable: exactly one of the three families.
struct KroneckerIndec {
    enum Kind { preproj, preinj, regular } kind;
    int n = 0;        // P_n / I_n index, or the regular multiplicity m
    P1Point x;        // regular only

    DimVec dim() const;
    std::string str() const;
    bool operator==(const KroneckerIndec&) const = default;
    bool operator<(const KroneckerIndec& o) const;
};

class KroneckerClass {
public:
    KroneckerClass() = default;
    explicit KroneckerClass(std::vector<KroneckerIndec> summands);
    static KroneckerClass zero() { return KroneckerClass(); }
    static KroneckerClass simple_injective() { return of(KroneckerIndec{KroneckerIndec::preinj, 0, {}}); }
    static KroneckerClass simple_projective() { return of(KroneckerIndec{KroneckerIndec::preproj, 0, {}}); }
    static KroneckerClass of(KroneckerIndec ind) { return KroneckerClass({std::move(ind)}); }

    const std::vector<KroneckerIndec>& summands() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    DimVec dim() const;
    int total_dim() const;
    long long defect() const; // <delta, dim> = d1 - d2

    KroneckerClass direct_sum(const KroneckerClass& other) const;
    // Partition of multiplicities at one point (regular part at x).
    Partition regular_partition(const P1Point& x) const;
    bool regular_points_distinct() const; // at most one summand from each tube

    std::string str() const; // "P(1)+R[inf](2)+I(0)", zero "0"
    static KroneckerClass parse(const std::string& text, int q);

    bool operator==(const KroneckerClass&) const = default;
    bool operator<(const KroneckerClass& o) const;

private:
    std::vector<KroneckerIndec> parts_; // canonically sorted
};

// Euler form <a,b> = a1 b1 + a2 b2 - 2 a1 b2 and the radical vector.
long long kronecker_euler(const DimVec& a, const DimVec& b);
inline DimVec kronecker_delta() { return {1, 1}; }

// Closed-form Hom dimension between indecomposables (q-independent given the
// classes): Hom(P_a,P_b)=max(0,b-a+1), Hom(I_a,I_b)=max(0,a-b+1),
// Hom(P_a,I_b)=a+b, Hom(R_x(m),R_x(k))=min(m,k)deg(x), Hom(P,R)=Hom(R,I)=m*deg(x),
// all other directions zero.
int dim_hom(const KroneckerIndec& a, const KroneckerIndec& b);
int dim_hom(const KroneckerClass& a, const KroneckerClass& b);
int dim_end(const KroneckerClass& m);
int dim_ext(const KroneckerClass& a, const KroneckerClass& b);

// |Aut M| as a polynomial in q (valid for the field the points live over).
Poly aut_order(const KroneckerClass& m);

// All iso-classes of the given dimension vector over F_q.
std::vector<KroneckerClass> kronecker_classes_of_dim(const DimVec& d, int q);
// All indecomposables of the given dimension vector (empty if not a root).
std::vector<KroneckerIndec> kronecker_indecs_of_dim(const DimVec& d, int q);

} // namespace hallwright
