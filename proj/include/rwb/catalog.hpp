#pragma once

#include <map>
#include <string>
#include <string_view>

#include "rwb/class_spec.hpp"

namespace rwb {

// A built-in class together with the verdicts its standard checks are
// expected to produce at the listed default bounds. Replaying the expected
// table is the catalog's regression suite.
struct CatalogEntry {
    ClassSpec spec;
    std::string provenance;
    std::map<std::string, std::string> expected; // check name -> verdict / count
    std::map<std::string, int> bounds;           // check name -> default bound
};

const std::vector<CatalogEntry>& list_classes();

// UnknownClass when the name is not one of: linear-orders, graphs,
// ordered-graphs, equivalence-relations, convex-er, ordered-trees,
// maxdeg2-graphs.
ClassSpec get_class(std::string_view name);

const CatalogEntry& get_entry(std::string_view name);

// Semantic membership predicate used to derive each built-in forbidden set;
// exposed for cross-checking in tests.
bool catalog_semantics(std::string_view class_name, const Structure& s);

// All structures over `sig` of exactly the given size (every table
// combination), streamed to fn. Intended for small sizes only.
void for_each_structure(const Signature& sig, int size, const std::function<void(const Structure&)>& fn);

} // namespace rwb
