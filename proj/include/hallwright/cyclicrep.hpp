#pragma once

// Nilpotent representations of the cyclic quiver with l+1 vertices 0..l and
// arrows i -> i+1 (mod l+1).  Every module is a direct sum of uniserial
// segments S_i(a) (top at vertex i, socle at vertex i+a-1), so iso-classes
// are canonically sorted segment multisets and all invariants (Hom/Ext
// dimensions, automorphism counts, Loewy data) reduce to closed counts.

#include "hallwright/partition.hpp"
#include "hallwright/poly.hpp"

#include <string>
#include <vector>

namespace hallwright {

using DimVec = std::vector<int>;

int total(const DimVec& d);
DimVec add(const DimVec& a, const DimVec& b);
DimVec sub(const DimVec& a, const DimVec& b);
std::string dimvec_str(const DimVec& d);

class CyclicQuiver {
public:
    explicit CyclicQuiver(int l);

    int l() const { return n_ - 1; }
    int vertices() const { return n_; }
    DimVec delta() const { return DimVec(n_, 1); }
    // <a,b> = sum_i a_i b_i - sum_i a_i b_{i+1 mod n}
    long long euler_form(const DimVec& a, const DimVec& b) const;

private:
    int n_;
};

// The uniserial S_i(a): top vertex i, length a >= 1.
struct Segment {
    int top;
    int len;

    int socle(int n) const { return (top + len - 1) % n; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

// Canonical segment order: longer first, then smaller top.
bool segment_less(const Segment& a, const Segment& b);

class NilpotentModule {
public:
    NilpotentModule(int vertices, std::vector<Segment> segments);
    static NilpotentModule zero(int vertices) { return NilpotentModule(vertices, {}); }
    static NilpotentModule simple(int vertices, int i) { return NilpotentModule(vertices, {{i, 1}}); }

    int vertices() const { return n_; }
    const std::vector<Segment>& segments() const { return segs_; }
    bool is_zero() const { return segs_.empty(); }

    DimVec dim() const;
    int total_dim() const;
    Partition loewy() const; // mu(M): segment lengths, descending
    std::vector<int> socle_mult() const;
    std::vector<int> top_mult() const;
    bool socle_square_free() const;
    bool top_square_free() const;

    NilpotentModule tau() const;           // shift every top by +1
    NilpotentModule direct_sum(const NilpotentModule& other) const;

    std::string str() const;               // "S0(2)+S1(1)", zero module "0"
    static NilpotentModule parse(int vertices, const std::string& text);

    bool operator==(const NilpotentModule&) const = default;
    bool operator<(const NilpotentModule&) const;

private:
    int n_;
    std::vector<Segment> segs_;
};

// dim Hom(S_i(a), S_j(b)) = #{1 <= c <= min(a,b) : c = b+j-i mod n};
// extended bilinearly over direct sums.
int dim_hom(const NilpotentModule& m, const NilpotentModule& n);
long long euler_form(const NilpotentModule& m, const NilpotentModule& n);
int dim_ext(const NilpotentModule& m, const NilpotentModule& n);
int dim_end(const NilpotentModule& m);

// |Aut M| as a polynomial in q.
Poly aut_order(const NilpotentModule& m);

// All iso-classes with the given dimension vector.
std::vector<NilpotentModule> modules_of_dim(int vertices, const DimVec& d);

// Support of the central generator: dim M = m*delta, socle square-free.
std::vector<NilpotentModule> z_support(int m, int l);

// Z_pi = sum over parts t of S_0(pi_t) + ... + S_l(pi_t).
NilpotentModule Z_module(const Partition& pi, int l);

} // namespace hallwright
