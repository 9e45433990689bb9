#include "rwb/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rwb/canonical.hpp"
#include "rwb/embedding.hpp"
#include "rwb/errors.hpp"

namespace rwb {

namespace {

bool rel2(const Structure& s, int r, int x, int y) {
    int t[2] = {x, y};
    return s.holds(r, std::span<const int>(t, 2));
}

bool strict_linear_order(const Structure& s, int r) {
    const int n = s.size();
    for (int x = 0; x < n; ++x) {
        if (rel2(s, r, x, x)) return false;
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (rel2(s, r, x, y) == rel2(s, r, y, x)) return false;
            for (int z = 0; z < n; ++z)
                if (z != x && z != y && rel2(s, r, x, y) && rel2(s, r, y, z) && !rel2(s, r, x, z)) return false;
        }
    }
    return true;
}

bool loopless_symmetric(const Structure& s, int r) {
    const int n = s.size();
    for (int x = 0; x < n; ++x) {
        if (rel2(s, r, x, x)) return false;
        for (int y = 0; y < n; ++y)
            if (rel2(s, r, x, y) != rel2(s, r, y, x)) return false;
    }
    return true;
}

bool equivalence(const Structure& s, int r) {
    const int n = s.size();
    for (int x = 0; x < n; ++x) {
        if (!rel2(s, r, x, x)) return false;
        for (int y = 0; y < n; ++y) {
            if (rel2(s, r, x, y) != rel2(s, r, y, x)) return false;
            for (int z = 0; z < n; ++z)
                if (rel2(s, r, x, y) && rel2(s, r, y, z) && !rel2(s, r, x, z)) return false;
        }
    }
    return true;
}

bool max_degree(const Structure& s, int r, int bound) {
    for (int x = 0; x < s.size(); ++x) {
        int deg = 0;
        for (int y = 0; y < s.size(); ++y)
            if (y != x && rel2(s, r, x, y)) ++deg;
        if (deg > bound) return false;
    }
    return true;
}

bool semantics(std::string_view name, const Structure& s) {
    const Signature& sig = s.signature();
    if (name == "linear-orders") return strict_linear_order(s, sig.relation_index("<"));
    if (name == "graphs") return loopless_symmetric(s, sig.relation_index("E"));
    if (name == "ordered-graphs")
        return strict_linear_order(s, sig.relation_index("<")) && loopless_symmetric(s, sig.relation_index("E"));
    if (name == "equivalence-relations") return equivalence(s, sig.relation_index("E"));
    if (name == "maxdeg2-graphs")
        return loopless_symmetric(s, sig.relation_index("E")) && max_degree(s, sig.relation_index("E"), 2);
    if (name == "convex-er") {
        const int lt = sig.relation_index("<");
        const int e = sig.relation_index("E");
        if (!strict_linear_order(s, lt) || !equivalence(s, e)) return false;
        // convexity: x < y < z and E(x,z) imply E(x,y)
        for (int x = 0; x < s.size(); ++x)
            for (int y = 0; y < s.size(); ++y)
                for (int z = 0; z < s.size(); ++z)
                    if (rel2(s, lt, x, y) && rel2(s, lt, y, z) && rel2(s, e, x, z) && !rel2(s, e, x, y))
                        return false;
        return true;
    }
    if (name == "ordered-trees") {
        const CheckerInfo* c = find_checker("tree-meet-total");
        return c->predicate(s);
    }
    fail(Errc::UnknownClass, std::string(name));
}

// Minimal violators of the semantic predicate up to max_size, one per
// isomorphism class, sorted by (size, canonical code).
std::vector<Structure> derive_forbidden(std::string_view name, const Signature& sig, int max_size) {
    std::map<CanonicalCode, Structure> found;
    for (int n = 1; n <= max_size; ++n) {
        for_each_structure(sig, n, [&](const Structure& s) {
            if (semantics(name, s)) return;
            // minimal: every proper induced substructure satisfies the axioms
            const int subsets = 1 << n;
            for (int mask = 0; mask < subsets - 1; ++mask) {
                std::vector<int> subset;
                for (int i = 0; i < n; ++i)
                    if ((mask >> i) & 1) subset.push_back(i);
                if (static_cast<int>(subset.size()) == n) continue;
                if (!semantics(name, induced_substructure(s, subset))) return;
            }
            CanonicalCode code = canonical_form(s);
            if (!found.count(code)) found.emplace(std::move(code), canonical_representative(s));
        });
    }
    std::vector<Structure> out;
    for (auto& [code, s] : found) out.push_back(s);
    std::stable_sort(out.begin(), out.end(), [](const Structure& a, const Structure& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

Signature tree_signature() {
    return Signature({{"anc", 2}, {"<", 2}, {"R", 3}, {"sep", 3}}, {"root"});
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    auto add = [&](ClassSpec spec, std::string provenance, std::map<std::string, std::string> expected,
                   std::map<std::string, int> bounds) {
        entries.push_back(CatalogEntry{std::move(spec), std::move(provenance), std::move(expected), std::move(bounds)});
    };

    add({"linear-orders", order_signature(), derive_forbidden("linear-orders", order_signature(), 3), "",
         "finite strict linear orders"},
        "classical warm-up class",
        {{"hp", "PASS"}, {"jep", "PASS"}, {"ap", "PASS"}, {"rigidity", "PASS"}, {"order-types", "2"}, {"2-types", "3"}},
        {{"hp", 5}, {"jep", 4}, {"ap", 4}, {"rigidity", 6}, {"order-types", 5}, {"2-types", 4}});

    add({"graphs", graph_signature(), derive_forbidden("graphs", graph_signature(), 2), "",
         "finite simple graphs (loopless, symmetric)"},
        "classical non-rigid class",
        {{"hp", "PASS"}, {"jep", "PASS"}, {"ap", "PASS"}, {"rigidity", "FAIL"}, {"order-types", "0"}, {"2-types", "3"}},
        {{"hp", 5}, {"jep", 4}, {"ap", 4}, {"rigidity", 6}, {"order-types", 4}, {"2-types", 4}});

    add({"ordered-graphs", ordered_graph_signature(),
         derive_forbidden("ordered-graphs", ordered_graph_signature(), 3), "",
         "simple graphs carrying a strict linear order"},
        "ordered expansion of graphs",
        {{"hp", "PASS"}, {"jep", "PASS"}, {"ap", "PASS"}, {"rigidity", "PASS"}, {"order-types", "2"}, {"2-types", "5"}},
        {{"hp", 5}, {"jep", 4}, {"ap", 4}, {"rigidity", 5}, {"order-types", 4}, {"2-types", 4}});

    add({"equivalence-relations", graph_signature(),
         derive_forbidden("equivalence-relations", graph_signature(), 3), "",
         "finite equivalence relations (E reflexive)"},
        "classical non-rigid class",
        {{"hp", "PASS"}, {"jep", "PASS"}, {"ap", "PASS"}, {"rigidity", "FAIL"}, {"order-types", "0"}, {"2-types", "3"}},
        {{"hp", 5}, {"jep", 4}, {"ap", 4}, {"rigidity", 6}, {"order-types", 4}, {"2-types", 4}});

    add({"convex-er", ordered_graph_signature(), derive_forbidden("convex-er", ordered_graph_signature(), 3), "",
         "strict linear orders with a convex equivalence relation"},
        "ordered equivalence classes, convexity axiom",
        {{"hp", "PASS"}, {"jep", "PASS"}, {"ap", "PASS"}, {"rigidity", "PASS"}, {"order-types", "4"}, {"2-types", "5"}},
        {{"hp", 5}, {"jep", 4}, {"ap", 4}, {"rigidity", 6}, {"order-types", 5}, {"2-types", 4}});

    add({"ordered-trees", tree_signature(), {}, "tree-meet-total",
         "rooted trees with linear order, meet relation R and branch separation"},
        "ordered trees with most-recent-common-ancestor structure",
        {{"hp", "PASS"}, {"jep", "PASS"}, {"ap", "PASS"}, {"rigidity", "PASS"}, {"order-types", "4"},
         {"2-types", "5"}},
        {{"hp", 4}, {"jep", 3}, {"ap", 3}, {"rigidity", 4}, {"order-types", 4}, {"2-types", 3}});

    add({"maxdeg2-graphs", graph_signature(), derive_forbidden("maxdeg2-graphs", graph_signature(), 4), "",
         "simple graphs of maximum degree 2"},
        "amalgamation failure showcase",
        {{"hp", "PASS"}, {"jep", "PASS"}, {"ap", "FAIL"}, {"rigidity", "FAIL"}, {"order-types", "0"}, {"2-types", "3"}},
        {{"hp", 4}, {"jep", 4}, {"ap", 4}, {"rigidity", 5}, {"order-types", 4}, {"2-types", 4}});

    return entries;
}

} // namespace

void for_each_structure(const Signature& sig, int size, const std::function<void(const Structure&)>& fn) {
    // odometer over all table bits
    std::vector<std::pair<int, std::vector<int>>> slots; // (rel, tuple)
    for (int r = 0; r < sig.relation_count(); ++r) {
        const int arity = sig.arity(r);
        if (size == 0) continue;
        std::vector<int> t(static_cast<std::size_t>(arity), 0);
        while (true) {
            slots.emplace_back(r, t);
            int p = arity - 1;
            while (p >= 0 && ++t[static_cast<std::size_t>(p)] == size) {
                t[static_cast<std::size_t>(p)] = 0;
                --p;
            }
            if (p < 0) break;
        }
    }
    if (slots.size() > 24) fail(Errc::ResourceLimit, "structure space too large to enumerate");
    // with constants: every assignment of constants to elements
    std::vector<int> consts(static_cast<std::size_t>(sig.constant_count()), 0);
    while (true) {
        const std::size_t masks = std::size_t(1) << slots.size();
        for (std::size_t mask = 0; mask < masks; ++mask) {
            StructureBuilder b(sig, size);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1) b.set(slots[i].first, slots[i].second);
            bool const_ok = true;
            for (int c = 0; c < sig.constant_count(); ++c) {
                if (size == 0) { const_ok = false; break; }
                b.set_constant(c, consts[static_cast<std::size_t>(c)]);
            }
            if (!const_ok) return;
            fn(std::move(b).build());
        }
        if (sig.constant_count() == 0 || size == 0) break;
        int c = sig.constant_count() - 1;
        while (c >= 0 && ++consts[static_cast<std::size_t>(c)] == size) {
            consts[static_cast<std::size_t>(c)] = 0;
            --c;
        }
        if (c < 0) break;
    }
}

bool catalog_semantics(std::string_view class_name, const Structure& s) { return semantics(class_name, s); }

const std::vector<CatalogEntry>& list_classes() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry& get_entry(std::string_view name) {
    for (const auto& e : list_classes())
        if (e.spec.name == name) return e;
    fail(Errc::UnknownClass, std::string(name));
}

ClassSpec get_class(std::string_view name) { return get_entry(name).spec; }

} // namespace rwb
