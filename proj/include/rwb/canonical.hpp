#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rwb/structure.hpp"

namespace rwb {

// Total-order key: equal codes iff isomorphic (for structures over the same
// signature). The byte layout sorts by size, then relation tables, so e.g.
// the empty graph precedes K2 among size-2 graphs.
struct CanonicalCode {
    std::string bytes;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend std::strong_ordering operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_form(const Structure& s);

// A permutation realizing the canonical code: element i gets label perm[i].
std::vector<int> canonical_labeling(const Structure& s);

// The structure relabeled into canonical position.
Structure canonical_representative(const Structure& s);

bool is_isomorphic(const Structure& a, const Structure& b);

} // namespace rwb
