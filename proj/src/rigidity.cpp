#include "rwb/rigidity.hpp"

#include <algorithm>
#include <map>

#include "rwb/errors.hpp"

namespace rwb {

RigidityResult check_rigidity(const ModelCatalog& catalog, int n) {
    RigidityResult result;
    result.bound = n;
    for (int size = 1; size <= n && size <= catalog.max_size(); ++size) {
        for (const auto& m : catalog.models(size)) {
            ++result.models_checked;
            auto maps = embedding_maps(m, m);
            for (const auto& map : maps) {
                bool ident = true;
                for (std::size_t i = 0; i < map.size(); ++i)
                    if (map[i] != static_cast<int>(i)) { ident = false; break; }
                if (!ident) {
                    result.pass = false;
                    result.model = m;
                    result.automorphism = map;
                    return result;
                }
            }
        }
    }
    return result;
}

std::vector<int> nonrigid_bad_coloring(const Structure& a, const Embedding& sigma, const Structure& c) {
    if (!(sigma.source() == a) || !(sigma.target() == a))
        fail(Errc::InvalidArgument, "sigma is not a self-map of A");
    bool ident = true;
    for (int i = 0; i < a.size(); ++i)
        if (sigma(i) != i) { ident = false; break; }
    if (ident) fail(Errc::NotInvolution, "sigma is the identity");
    for (int i = 0; i < a.size(); ++i)
        if (sigma(sigma(i)) != i) fail(Errc::NotInvolution, "sigma does not have order 2");

    std::vector<std::vector<int>> hom_ac = embedding_maps(a, c);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(hom_ac.size()); ++i) index.emplace(hom_ac[static_cast<std::size_t>(i)], i);

    std::vector<int> coloring(hom_ac.size(), -1);
    std::vector<int> composed(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < static_cast<int>(hom_ac.size()); ++i) {
        if (coloring[static_cast<std::size_t>(i)] >= 0) continue;
        const auto& e = hom_ac[static_cast<std::size_t>(i)];
        for (int x = 0; x < a.size(); ++x) composed[static_cast<std::size_t>(x)] = e[static_cast<std::size_t>(sigma(x))];
        const int j = index.at(composed);
        // i is lex-first in its pair since unassigned pairs are met in order
        coloring[static_cast<std::size_t>(i)] = 0;
        coloring[static_cast<std::size_t>(j)] = 1;
    }
    return coloring;
}

} // namespace rwb
