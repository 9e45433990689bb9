#pragma once

// Internal: precomputed bad-pattern tables for classes over binary-only
// signatures whose forbidden structures have at most 3 elements. A k-element
// induced pattern packs into one word (relation-major, tuple odometer); the
// tables mark the words containing a forbidden induced substructure, turning
// anchored forbidden probes into table lookups. Cached per class.

#include <cstdint>
#include <vector>

#include "rwb/class_spec.hpp"

namespace rwb::detail {

struct PatternTables {
    bool eligible = false;
    int rels = 0;
    std::vector<char> bad2, bad3;
};

// packs the induced pattern of k elements given a bit source cb(rel, i, j)
template <typename CB>
std::uint32_t pack_pattern_bits(int rels, int k, CB&& cb) {
    std::uint32_t bits = 0;
    int at = 0;
    for (int r = 0; r < rels; ++r)
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (cb(r, i, j)) bits |= std::uint32_t(1) << at;
                ++at;
            }
    return bits;
}

// nullptr when the class does not qualify; the returned pointer stays valid
// for the process lifetime
const PatternTables* pattern_tables_for(const ClassSpec& spec);

} // namespace rwb::detail
