#pragma once

// Integer partitions and the partition statistics used by the Hall- and
// symmetric-function layers.

#include "hallwright/numeric.hpp"

#include <vector>

namespace hallwright {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;                 // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const {             // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    // n(lambda) = sum (i-1) lambda_i.
    Int n_stat() const;
    Partition conjugate() const;
    // Multiplicity of the value v among the parts.
    int multiplicity(int v) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Total order: by weight, then lexicographic on parts (map-key order).
    bool operator<(const Partition& o) const;

    std::string str() const; // "[3,1]", "[]"

private:
    std::vector<int> parts_; // weakly decreasing, all >= 1
};

// Multiset union of parts, sorted decreasingly.
Partition cup(const Partition& a, const Partition& b);

// The segment-partition comparison order: lambda < mu iff at
// the first index where they differ, lambda has the LARGER part.  Strict;
// defined for partitions of equal weight.
bool rev_lex_less(const Partition& a, const Partition& b);

// Dominance order lambda <= mu (same weight).
bool dominates(const Partition& mu, const Partition& lambda);

// All partitions of n (n >= 0), in lexicographically decreasing part order.
std::vector<Partition> partitions_of(int n);

// All partitions of weight 0..n.
std::vector<Partition> partitions_upto(int n);

} // namespace hallwright
