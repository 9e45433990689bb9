#include "rwb/order_types.hpp"

#include <algorithm>
#include <set>

#include "rwb/errors.hpp"
#include "rwb/fraisse_checks.hpp"

namespace rwb {

std::vector<QfType> irreflexive_two_types(const ModelCatalog& catalog, int n) {
    std::vector<QfType> out;
    for (auto& t : type_census(catalog, 2, n))
        if (t.irreflexive()) out.push_back(std::move(t));
    return out;
}

TypeOrderReport check_type_order_axioms(const QfType& p, const ModelCatalog& catalog, int n) {
    TypeOrderReport report;
    for (int size = 1; size <= n && size <= catalog.max_size(); ++size) {
        for (const auto& m : catalog.models(size)) {
            for (int x = 0; x < size; ++x)
                for (int y = 0; y < size; ++y) {
                    if (x == y) continue;
                    if (report.antisymmetric && qf_type(m, {x, y}) == p && qf_type(m, {y, x}) == p) {
                        report.antisymmetric = false;
                        report.symmetry_witness = m;
                        report.symmetry_pair = {x, y};
                    }
                    if (report.acyclic)
                        for (int z = 0; z < size; ++z) {
                            if (z == x || z == y) continue;
                            if (qf_type(m, {x, y}) == p && qf_type(m, {y, z}) == p && qf_type(m, {z, x}) == p) {
                                report.acyclic = false;
                                report.cycle_witness = m;
                                report.cycle_triple = {x, y, z};
                                break;
                            }
                        }
                }
            if (!report.antisymmetric && !report.acyclic) return report;
        }
    }
    return report;
}

namespace {

// <_W as a relation on one model: type_of[x][y] indexes the census type
// realized by (x,y), -1 when none (reflexive pairs).
bool is_strict_linear_order(const std::vector<std::vector<int>>& type_of, int size, std::uint32_t w) {
    auto lt = [&](int x, int y) {
        int t = type_of[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        return t >= 0 && ((w >> t) & 1);
    };
    for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
            if (x == y) continue;
            if (lt(x, y) == lt(y, x)) return false; // totality + antisymmetry
            for (int z = 0; z < size; ++z) {
                if (z == x || z == y) continue;
                if (lt(x, y) && lt(y, z) && !lt(x, z)) return false;
            }
        }
    return true;
}

} // namespace

std::vector<OrderCandidate> find_order_types(const ModelCatalog& catalog, int n) {
    std::vector<QfType> census = irreflexive_two_types(catalog, n);
    if (census.size() > 20) fail(Errc::ResourceLimit, "2-type census too large for subset search");

    // per model: map ordered pairs to census indices
    struct ModelPairs {
        int size;
        std::vector<std::vector<int>> type_of;
    };
    std::vector<ModelPairs> models;
    for (int size = 1; size <= n && size <= catalog.max_size(); ++size)
        for (const auto& m : catalog.models(size)) {
            ModelPairs mp;
            mp.size = size;
            mp.type_of.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size), -1));
            for (int x = 0; x < size; ++x)
                for (int y = 0; y < size; ++y) {
                    if (x == y) continue;
                    QfType t = qf_type(m, {x, y});
                    auto it = std::lower_bound(census.begin(), census.end(), t);
                    if (it != census.end() && *it == t)
                        mp.type_of[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                            static_cast<int>(it - census.begin());
                }
            models.push_back(std::move(mp));
        }

    std::vector<std::uint32_t> good;
    const std::uint32_t total = std::uint32_t(1) << census.size();
    for (std::uint32_t w = 0; w < total; ++w) {
        bool ok = true;
        for (const auto& mp : models)
            if (!is_strict_linear_order(mp.type_of, mp.size, w)) { ok = false; break; }
        if (ok) good.push_back(w);
    }
    std::stable_sort(good.begin(), good.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::vector<OrderCandidate> out;
    for (std::uint32_t w : good) {
        OrderCandidate cand;
        cand.verified_bound = n;
        for (std::size_t t = 0; t < census.size(); ++t)
            if ((w >> t) & 1) cand.types.push_back(census[t]);
        out.push_back(std::move(cand));
    }
    return out;
}

std::optional<MonochromaticSublist> find_monochromatic_2type(const Structure& m, std::span<const int> x,
                                                             int target) {
    std::vector<int> elems(x.begin(), x.end());
    {
        std::set<int> dedup(elems.begin(), elems.end());
        if (dedup.size() != elems.size()) fail(Errc::InvalidArgument, "X has repeated elements");
    }
    for (int e : elems)
        if (e < 0 || e >= m.size()) fail(Errc::OutOfRange, "X element outside universe");
    if (target > static_cast<int>(elems.size())) fail(Errc::InvalidArgument, "target exceeds |X|");

    if (target <= 1) {
        MonochromaticSublist out;
        if (target == 1) out.sublist = {elems.empty() ? 0 : elems[0]};
        return out; // degenerate: no pair, type absent by convention
    }

    const int nx = static_cast<int>(elems.size());
    // choose subsequences in lexicographic order of index sets
    std::vector<int> pick(static_cast<std::size_t>(target));
    std::optional<MonochromaticSublist> found;
    auto rec = [&](auto&& self, int from, int depth) -> bool {
        if (depth == target) {
            // all increasing pairs must share one type
            std::optional<QfType> common;
            for (int i = 0; i < target; ++i)
                for (int j = i + 1; j < target; ++j) {
                    QfType t = qf_type(m, {elems[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])],
                                           elems[static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])]});
                    if (!common)
                        common = std::move(t);
                    else if (!(*common == t))
                        return false;
                }
            MonochromaticSublist out;
            out.type = std::move(common);
            for (int i = 0; i < target; ++i) out.sublist.push_back(elems[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
            found = std::move(out);
            return true;
        }
        for (int i = from; i <= nx - (target - depth); ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            if (self(self, i + 1, depth + 1)) return true;
        }
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

} // namespace rwb
