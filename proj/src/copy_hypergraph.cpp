#include "rwb/copy_hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rwb/errors.hpp"

namespace rwb {

CopyHypergraph copy_hypergraph(const Structure& a, const Structure& b, const Structure& c) {
    CopyHypergraph h;
    std::vector<std::vector<int>> hom_ab = embedding_maps(a, b);
    if (hom_ab.empty()) fail(Errc::EmptyHom, "hom(A,B) is empty; the arrow is vacuous");
    h.hom_ab = static_cast<long>(hom_ab.size());
    h.vertices = embedding_maps(a, c);

    std::map<std::vector<int>, int> vertex_index;
    for (int i = 0; i < static_cast<int>(h.vertices.size()); ++i)
        vertex_index.emplace(h.vertices[static_cast<std::size_t>(i)], i);

    std::set<std::vector<int>> edge_set;
    std::vector<int> composed(static_cast<std::size_t>(a.size()));
    for (const auto& e : embedding_maps(b, c)) {
        std::vector<int> edge;
        edge.reserve(hom_ab.size());
        for (const auto& f : hom_ab) {
            for (int i = 0; i < a.size(); ++i)
                composed[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])];
            edge.push_back(vertex_index.at(composed));
        }
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        edge_set.insert(std::move(edge));
    }
    h.edges.assign(edge_set.begin(), edge_set.end());
    return h;
}

} // namespace rwb
