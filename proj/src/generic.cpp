#include "rwb/generic.hpp"

#include <algorithm>
#include <map>

#include "rwb/embedding.hpp"
#include "rwb/errors.hpp"

namespace rwb {

namespace {

// (B, B0) pairs driving extension demands: B a member of size <= m, B0 a
// proper subset carrying all the constants.
struct DemandType {
    const Structure* whole;
    std::vector<int> sub; // sorted subset
    Structure base;       // induced(whole, sub)
};

std::vector<DemandType> demand_types(const ModelCatalog& catalog, int m) {
    std::vector<DemandType> out;
    const Signature& sig = catalog.spec().signature;
    for (int size = 1; size <= m && size <= catalog.max_size(); ++size) {
        for (const auto& b : catalog.models(size)) {
            for (int mask = 0; mask < (1 << size) - 1; ++mask) {
                bool ok = true;
                for (int c = 0; c < sig.constant_count(); ++c)
                    if (!((mask >> b.constant(c)) & 1)) { ok = false; break; }
                if (!ok) continue;
                std::vector<int> sub;
                for (int i = 0; i < size; ++i)
                    if ((mask >> i) & 1) sub.push_back(i);
                out.push_back(DemandType{&b, sub, induced_substructure(b, sub)});
            }
        }
    }
    return out;
}

// Does the embedding e of dt.base into host extend to all of dt.whole?
bool demand_met(const DemandType& dt, const std::vector<int>& e, const Structure& host) {
    std::vector<int> partial(static_cast<std::size_t>(dt.whole->size()), -1);
    for (std::size_t i = 0; i < dt.sub.size(); ++i)
        partial[static_cast<std::size_t>(dt.sub[i])] = e[i];
    return !embedding_maps_extending(*dt.whole, host, partial, true).empty();
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d649bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t demand_rank(std::uint64_t seed, std::size_t type_index, const std::vector<int>& e) {
    std::uint64_t h = splitmix64(seed ^ (0x517cc1b727220a95ULL + type_index));
    for (int v : e) h = splitmix64(h ^ static_cast<std::uint64_t>(v + 1));
    return h;
}

} // namespace

EpResult check_extension_property(const ModelCatalog& demand_catalog, const Structure& host, int m) {
    EpResult result;
    result.bound = m;
    for (const auto& dt : demand_types(demand_catalog, m)) {
        for (const auto& e : embedding_maps(dt.base, host)) {
            ++result.demands_checked;
            if (!demand_met(dt, e, host)) {
                result.pass = false;
                result.failing = ExtensionDemand{*dt.whole, dt.sub, e};
                return result;
            }
        }
    }
    return result;
}

EpResult check_extension_property(const ClassSpec& spec, const Structure& host, int m) {
    return check_extension_property(enumerate_models(spec, m), host, m);
}

GrowReport grow_generic(const ClassSpec& spec, int budget, std::uint64_t seed, int demand_cap) {
    if (budget < 1) fail(Errc::InvalidArgument, "budget must be positive");
    if (demand_cap < 1) fail(Errc::InvalidArgument, "demand cap must be positive");
    ModelCatalog catalog = enumerate_models(spec, demand_cap);
    if (catalog.models(1).empty()) fail(Errc::InvalidArgument, "class has no size-1 member");
    std::vector<DemandType> types = demand_types(catalog, demand_cap);

    Structure host = catalog.models(1).front();
    int steps = 0;
    bool saturated = false;

    // first-seen step per demand; demands stay met once met, so ages only
    // matter for currently unmet ones
    std::map<std::pair<std::size_t, std::vector<int>>, int> first_seen;

    while (true) {
        struct Pending {
            std::size_t type_index;
            std::vector<int> embedding;
            int age;
            std::uint64_t rank;
        };
        std::vector<Pending> unmet;
        for (std::size_t ti = 0; ti < types.size(); ++ti) {
            for (auto& e : embedding_maps(types[ti].base, host)) {
                if (demand_met(types[ti], e, host)) continue;
                auto key = std::make_pair(ti, e);
                auto it = first_seen.find(key);
                if (it == first_seen.end()) it = first_seen.emplace(key, steps).first;
                unmet.push_back(Pending{ti, e, it->second, demand_rank(seed, ti, e)});
            }
        }
        if (unmet.empty()) {
            saturated = true;
            break;
        }
        std::sort(unmet.begin(), unmet.end(), [](const Pending& a, const Pending& b) {
            if (a.age != b.age) return a.age < b.age;
            if (a.rank != b.rank) return a.rank < b.rank;
            if (a.type_index != b.type_index) return a.type_index < b.type_index;
            return a.embedding < b.embedding;
        });
        const Pending& next = unmet.front();
        const DemandType& dt = types[next.type_index];
        const int growth = dt.whole->size() - static_cast<int>(dt.sub.size());
        if (host.size() + growth > budget) break;

        Span span{dt.base, host, next.embedding, *dt.whole, dt.sub};
        AmalgamResult am = find_amalgam(spec, span);
        if (!am.found)
            fail(Errc::ApFailure, "no amalgam for a pending extension demand in class " + spec.name);
        host = am.amalgam;
        ++steps;
    }
    return GrowReport{host, steps, saturated};
}

} // namespace rwb
