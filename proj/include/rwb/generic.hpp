#pragma once

#include <cstdint>
#include <optional>

#include "rwb/amalgam.hpp"
#include "rwb/model_catalog.hpp"

namespace rwb {

// One unmet extension demand: some embedding of induced(sub) into the host
// does not extend to an embedding of the whole structure.
struct ExtensionDemand {
    Structure whole;            // B
    std::vector<int> sub;       // elements of B forming B0 (sorted)
    std::vector<int> embedding; // induced(B0) element -> host element
};

struct EpResult {
    bool pass = true;
    int bound = 0;
    std::optional<ExtensionDemand> failing;
    long demands_checked = 0;
};

// Extension property: every embedding of a proper substructure of any member
// B with |B| <= m extends to B. For signatures with constants, only
// substructures containing the constants are considered.
EpResult check_extension_property(const ClassSpec& spec, const Structure& host, int m);
EpResult check_extension_property(const ModelCatalog& demand_catalog, const Structure& host, int m);

struct GrowReport {
    Structure result;
    int steps = 0;
    bool saturated = false; // no unmet demand at the cap when stopping
};

// Generic-structure growth: starting from the least seed member, repeatedly
// pick the longest-outstanding unmet extension demand (ties shuffled by
// seed) and amalgamate it into the host, until the size budget would be
// exceeded or every demand up to demand_cap is met. Deterministic in
// (spec, budget, seed, demand_cap).
GrowReport grow_generic(const ClassSpec& spec, int budget, std::uint64_t seed, int demand_cap = 2);

} // namespace rwb
