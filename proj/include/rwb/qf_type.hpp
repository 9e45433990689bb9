#pragma once

#include <compare>
#include <span>
#include <vector>

#include "rwb/bitset.hpp"
#include "rwb/structure.hpp"

namespace rwb {

// The atomic type of a k-tuple: the equality pattern on positions 0..k-1
// plus, per relation, the set of position-tuples that hold. Two tuples get
// equal QfTypes exactly when the labeled substructures they span (with
// repetitions) are identical.
class QfType {
public:
    // eq_classes: class id per position, normalized to first-occurrence order
    // (position 0 has class 0, the next new class is 1, ...).
    // patterns[r]: bit per position-tuple in mixed radix base k.
    QfType(Signature sig, int arity, std::vector<int> eq_classes, std::vector<Bitset> patterns);

    int arity() const { return k_; }
    const Signature& signature() const { return sig_; }
    const std::vector<int>& equality_classes() const { return eq_; }

    bool pattern_holds(int rel, std::span<const int> positions) const;
    // Sorted decoded position-tuples of one relation.
    std::vector<std::vector<int>> pattern_tuples(int rel) const;

    // All positions pairwise distinct.
    bool irreflexive() const;

    friend bool operator==(const QfType& a, const QfType& b) {
        return a.k_ == b.k_ && a.eq_ == b.eq_ && a.pat_ == b.pat_ && a.sig_ == b.sig_;
    }
    // Total order used for deterministic census output. Only meaningful
    // between types over the same signature.
    friend std::strong_ordering operator<=>(const QfType& a, const QfType& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        if (auto c = a.eq_ <=> b.eq_; c != 0) return c;
        return a.pat_ <=> b.pat_;
    }

private:
    Signature sig_;
    int k_;
    std::vector<int> eq_;
    std::vector<Bitset> pat_;
};

// Atomic type of a tuple of elements of S (entries may repeat).
QfType qf_type(const Structure& s, std::span<const int> tuple);
QfType qf_type(const Structure& s, std::initializer_list<int> tuple);

} // namespace rwb
