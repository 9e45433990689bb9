#pragma once

// Test-only brute-force oracles, kept independent of the library's search
// paths: embeddings by direct scan over injective maps, isomorphism by
// permutation search, arrows by full coloring enumeration.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rwb/structure.hpp"

namespace oracle {

inline bool map_is_embedding(const rwb::Structure& a, const rwb::Structure& c,
                             const std::vector<int>& map) {
    const rwb::Signature& sig = a.signature();
    for (int k = 0; k < sig.constant_count(); ++k)
        if (map[static_cast<std::size_t>(a.constant(k))] != c.constant(k)) return false;
    for (int r = 0; r < sig.relation_count(); ++r) {
        const int arity = sig.arity(r);
        std::vector<int> t(static_cast<std::size_t>(arity), 0), img(static_cast<std::size_t>(arity));
        if (a.size() == 0) continue;
        while (true) {
            for (int p = 0; p < arity; ++p) img[static_cast<std::size_t>(p)] = map[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
            if (a.holds(r, t) != c.holds(r, img)) return false;
            int p = arity - 1;
            while (p >= 0 && ++t[static_cast<std::size_t>(p)] == a.size()) {
                t[static_cast<std::size_t>(p)] = 0;
                --p;
            }
            if (p < 0) break;
        }
    }
    return true;
}

// every injective map, by direct enumeration
inline std::vector<std::vector<int>> all_embeddings(const rwb::Structure& a, const rwb::Structure& c) {
    std::vector<std::vector<int>> out;
    const int n = a.size(), m = c.size();
    if (n > m) return out;
    std::vector<int> map(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (map_is_embedding(a, c, map)) out.push_back(map);
            return;
        }
        for (int v = 0; v < m; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            map[static_cast<std::size_t>(depth)] = v;
            self(self, depth + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

inline bool isomorphic(const rwb::Structure& a, const rwb::Structure& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (map_is_embedding(a, b, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// C -> (B)^A_k by scanning every coloring of hom(A,C)
inline bool arrow_holds(const rwb::Structure& c, const rwb::Structure& b, const rwb::Structure& a,
                        int k) {
    auto hom_ac = all_embeddings(a, c);
    auto hom_ab = all_embeddings(a, b);
    auto hom_bc = all_embeddings(b, c);
    auto index_of = [&](const std::vector<int>& m) {
        return static_cast<int>(std::lower_bound(hom_ac.begin(), hom_ac.end(), m) - hom_ac.begin());
    };
    std::sort(hom_ac.begin(), hom_ac.end());
    std::vector<std::vector<int>> edges;
    for (const auto& e : hom_bc) {
        std::vector<int> edge;
        for (const auto& f : hom_ab) {
            std::vector<int> comp(static_cast<std::size_t>(a.size()));
            for (int i = 0; i < a.size(); ++i) comp[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])];
            edge.push_back(index_of(comp));
        }
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        edges.push_back(std::move(edge));
    }
    const std::size_t v = hom_ac.size();
    std::vector<int> color(v, 0);
    // odometer over k^v colorings; holds iff every coloring leaves some
    // monochromatic edge
    while (true) {
        bool some_mono = false;
        for (const auto& e : edges) {
            bool mono = true;
            for (std::size_t i = 1; i < e.size(); ++i)
                if (color[static_cast<std::size_t>(e[i])] != color[static_cast<std::size_t>(e[0])]) {
                    mono = false;
                    break;
                }
            if (mono && !e.empty()) { some_mono = true; break; }
        }
        if (!some_mono) return false; // found a coloring with no mono copy
        std::size_t p = 0;
        while (p < v && ++color[p] == k) {
            color[p] = 0;
            ++p;
        }
        if (p == v) break;
    }
    return true;
}

// seeded random simple graph
inline rwb::Structure random_graph(int n, std::mt19937_64& rng) {
    rwb::StructureBuilder b(rwb::graph_signature(), n);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) {
                b.add(0, {i, j});
                b.add(0, {j, i});
            }
    return std::move(b).build();
}

// seeded random structure over a 2-relation binary signature (arbitrary
// tables, not a member of anything)
inline rwb::Structure random_two_relation(int n, std::mt19937_64& rng) {
    rwb::StructureBuilder b(rwb::ordered_graph_signature(), n);
    std::bernoulli_distribution coin(0.4);
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (coin(rng)) b.set(r, std::vector<int>{i, j});
    return std::move(b).build();
}

} // namespace oracle
