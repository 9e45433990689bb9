#pragma once

#include <optional>

#include "rwb/model_catalog.hpp"
#include "rwb/qf_type.hpp"

namespace rwb {

// Arity-2 atomic types realized in members of size <= n whose equality
// pattern separates the coordinates.
std::vector<QfType> irreflexive_two_types(const ModelCatalog& catalog, int n);

struct TypeOrderReport {
    bool antisymmetric = true; // no model realizes p(x,y) and p(y,x)
    bool acyclic = true;       // no model realizes a p-3-cycle
    std::optional<Structure> symmetry_witness;
    std::vector<int> symmetry_pair;
    std::optional<Structure> cycle_witness;
    std::vector<int> cycle_triple;
};

TypeOrderReport check_type_order_axioms(const QfType& p, const ModelCatalog& catalog, int n);

// A union W of irreflexive 2-types such that x <_W y (some p in W realized
// by (x,y)) is a strict linear order of every member of size <= n.
struct OrderCandidate {
    std::vector<QfType> types;
    int verified_bound = 0;
};

// Exhaustive search over subsets of the irreflexive 2-type census with early
// pruning; results sorted by |W| then canonically. ResourceLimit when the
// census exceeds 20 types.
std::vector<OrderCandidate> find_order_types(const ModelCatalog& catalog, int n);

// Largest-first search for a sublist of X of the given length whose
// increasing pairs (in listing order) all realize one atomic 2-type. For
// target <= 1 the type is absent by convention.
struct MonochromaticSublist {
    std::optional<QfType> type;
    std::vector<int> sublist;
};

std::optional<MonochromaticSublist> find_monochromatic_2type(const Structure& m, std::span<const int> x,
                                                             int target);

} // namespace rwb
