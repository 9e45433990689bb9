#pragma once

#include <optional>

#include "rwb/embedding.hpp"
#include "rwb/model_catalog.hpp"

namespace rwb {

struct RigidityResult {
    bool pass = true;
    int bound = 0;
    std::optional<Structure> model;   // on fail: the non-rigid member
    std::vector<int> automorphism;    // on fail: a nontrivial automorphism
    long models_checked = 0;
};

// PASS iff every catalog member of size <= n has a trivial automorphism
// group; on fail returns the first member (catalog order) together with its
// lex-least nontrivial automorphism.
RigidityResult check_rigidity(const ModelCatalog& catalog, int n);

// The 2-coloring h of hom(A,C) with h(e∘sigma) != h(e): the lex-smaller of
// each {e, e∘sigma} pair gets color 0. sigma must be a nontrivial
// automorphism of order 2 (NotInvolution otherwise). The result refutes
// decide_arrow(C, A, A, 2).
std::vector<int> nonrigid_bad_coloring(const Structure& a, const Embedding& sigma, const Structure& c);

} // namespace rwb
