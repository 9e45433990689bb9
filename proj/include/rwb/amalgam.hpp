#pragma once

#include <vector>

#include "rwb/class_spec.hpp"

namespace rwb {

// A span of embeddings A0 -> A1, A0 -> A2 presented by the images of the
// base elements on both sides.
struct Span {
    Structure base;              // A0
    Structure left;              // A1
    std::vector<int> left_map;   // base element -> left element
    Structure right;             // A2
    std::vector<int> right_map;  // base element -> right element
};

struct AmalgamResult {
    bool found = false;
    Structure amalgam;           // member completing the span, when found
    std::vector<int> g_left;     // left element -> amalgam element
    std::vector<int> g_right;    // right element -> amalgam element
    long nodes = 0;
};

// Exhaustive amalgam search within size |A1| + |A2| - |A0|: all
// identification patterns of right-fresh elements with left-fresh elements,
// each followed by backtracking over the undetermined cross relations (free
// relations only; derived relations are recomputed by the checker's
// completion). Every candidate is verified: membership plus both inclusion
// maps being embeddings. Deterministic; the identification-free pattern is
// tried first.
AmalgamResult find_amalgam(const ClassSpec& spec, const Span& span, long node_budget = 2'000'000);

} // namespace rwb
