#pragma once

#include <optional>
#include <vector>

#include "rwb/amalgam.hpp"
#include "rwb/model_catalog.hpp"
#include "rwb/qf_type.hpp"

namespace rwb {

// hereditary-extension check: every subset of every member of size <= n must
// sit inside a member substructure of the same model
struct HpResult {
    bool pass = true;
    int bound = 0;
    std::optional<Structure> model;  // on fail: the ambient model B
    std::vector<int> subset;         // on fail: the stranded subset A0
};

struct JepResult {
    bool pass = true;
    int bound = 0;
    std::optional<std::pair<Structure, Structure>> pair; // on fail
    long spans = 0;
};

// Verdict for the amalgamation check; on fail carries the span (A0, f1, f2)
// for which exhaustive search up to the free-amalgam size bound found no
// amalgam.
struct ApResult {
    bool pass = true;
    int bound = 0;
    std::optional<Span> span;
    int amalgam_size_bound = 0; // |A1| + |A2| - |A0| of the failing span
    long spans = 0;             // spans examined (individually or via proofs)
};

HpResult check_hp(const ModelCatalog& catalog, int n);
JepResult check_jep(const ModelCatalog& catalog, int n, int workers = 1);
ApResult check_ap(const ModelCatalog& catalog, int n, int workers = 1);

// All atomic k-types realized by tuples (repetitions allowed) in members of
// size <= n, deduplicated and sorted.
std::vector<QfType> type_census(const ModelCatalog& catalog, int k, int n);

// Re-run the exhaustive amalgam search on a certificate span; true when the
// failure reproduces (no amalgam exists within the size bound).
bool ap_certificate_replays(const ClassSpec& spec, const Span& span);

bool jep_certificate_replays(const ClassSpec& spec, const Structure& a1, const Structure& a2);

} // namespace rwb
