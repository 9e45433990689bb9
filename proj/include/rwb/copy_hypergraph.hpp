#pragma once

#include <vector>

#include "rwb/embedding.hpp"

namespace rwb {

// Reduction of the partition arrow to weak hypergraph coloring: vertices are
// the embeddings of A into C (lex order); one hyperedge per embedding
// e of B into C collects the indices of e∘f over f in hom(A,B). Edges are
// deduplicated and sorted. The arrow C -> (B)^A_k holds iff this hypergraph
// has no weak k-coloring.
struct CopyHypergraph {
    std::vector<std::vector<int>> vertices; // embedding maps A -> C, lex order
    std::vector<std::vector<int>> edges;    // sorted vertex-index sets
    long hom_ab = 0;                        // |hom(A,B)|
};

// EmptyHom when hom(A,B) is empty (the arrow would be vacuous; signalled,
// not silently true).
CopyHypergraph copy_hypergraph(const Structure& a, const Structure& b, const Structure& c);

} // namespace rwb
