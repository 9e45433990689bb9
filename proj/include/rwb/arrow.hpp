#pragma once

#include <optional>

#include "rwb/copy_hypergraph.hpp"
#include "rwb/model_catalog.hpp"

namespace rwb {

inline constexpr long kDefaultNodeBudget = 10'000'000;

struct ArrowStats {
    long vertices = 0;
    long edges = 0;
    long nodes = 0;
};

// Verdict of the arrow decision C -> (B)^A_k. holds=false carries a coloring
// of hom(A,C) with no monochromatic copy edge, re-verified before return.
struct ArrowVerdict {
    bool holds = false;
    std::vector<int> coloring; // vertex index (lex order of hom(A,C)) -> color
    ArrowStats stats;
};

// Backtracking over the copy hypergraph: vertices in descending edge-degree
// order, colors canonicalized (a vertex may use at most one color beyond
// those already used), pruning any branch that completes a monochromatic
// edge. Deterministic; with workers > 1 the search tree splits at fixed
// depth 2 and the fold reproduces the single-threaded verdict, certificate
// and node count exactly.
ArrowVerdict decide_arrow(const Structure& c, const Structure& b, const Structure& a, int k,
                          long node_budget = kDefaultNodeBudget, int workers = 1);

// True when the coloring leaves no edge monochromatic (the certificate
// check).
bool coloring_refutes(const CopyHypergraph& h, const std::vector<int>& coloring, int k);

struct WitnessResult {
    std::optional<Structure> witness;
    int searched_up_to = 0;
    long models_tried = 0;
    ArrowStats stats; // of the successful decision (or last attempted)
};

// First catalog model C (size ascending, canonical order) with
// decide_arrow(C,B,A,k).holds.
WitnessResult find_witness(const ModelCatalog& catalog, const Structure& a, const Structure& b, int k,
                           int max_size, long node_budget = kDefaultNodeBudget, int workers = 1);

} // namespace rwb
