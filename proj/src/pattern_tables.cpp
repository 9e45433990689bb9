#include "pattern_tables.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "rwb/canonical.hpp"
#include "rwb/embedding.hpp"

namespace rwb::detail {

namespace {

bool eligible(const ClassSpec& spec) {
    if (!spec.checker.empty()) return false;
    const Signature& sig = spec.signature;
    // the 3-element table takes 2^(9 * rels) entries
    if (sig.relation_count() < 1 || sig.relation_count() > 2) return false;
    for (int r = 0; r < sig.relation_count(); ++r)
        if (sig.arity(r) != 2) return false;
    for (const auto& f : spec.forbidden)
        if (f.size() > 3 || f.size() < 1) return false;
    return true;
}

std::string cache_key(const ClassSpec& spec) {
    std::string key;
    for (const auto& r : spec.signature.relations()) key += r.name + "/" + std::to_string(r.arity) + ";";
    key += "|";
    for (const auto& f : spec.forbidden) key += canonical_form(f).bytes + "#";
    return key;
}

std::unique_ptr<PatternTables> build(const ClassSpec& spec) {
    auto t = std::make_unique<PatternTables>();
    t->eligible = true;
    t->rels = spec.signature.relation_count();
    auto mark = [&](int k, std::vector<char>& bad) {
        const std::uint32_t total = std::uint32_t(1) << (t->rels * k * k);
        bad.assign(total, 0);
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            StructureBuilder b(spec.signature, k);
            int at = 0;
            for (int r = 0; r < t->rels; ++r)
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        if ((mask >> at) & 1) {
                            int tup[2] = {i, j};
                            b.set(r, std::span<const int>(tup, 2));
                        }
                        ++at;
                    }
            Structure s = std::move(b).build();
            for (const auto& f : spec.forbidden)
                if (f.size() <= k && embeds(f, s)) {
                    bad[mask] = 1;
                    break;
                }
        }
    };
    mark(2, t->bad2);
    mark(3, t->bad3);
    return t;
}

} // namespace

const PatternTables* pattern_tables_for(const ClassSpec& spec) {
    if (!eligible(spec)) return nullptr;
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<PatternTables>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.try_emplace(cache_key(spec));
    if (inserted) it->second = build(spec);
    return it->second.get();
}

} // namespace rwb::detail
