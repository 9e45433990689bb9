#include "rwb/palette.hpp"

#include <algorithm>

#include "rwb/errors.hpp"
#include "rwb/qf_type.hpp"

namespace rwb {

void Palette::set(std::vector<int> tuple, int color) {
    if (static_cast<int>(tuple.size()) != arity_) fail(Errc::InvalidArgument, "palette tuple arity mismatch");
    map_[std::move(tuple)] = color;
}

int Palette::color(std::span<const int> tuple) const {
    auto it = map_.find(std::vector<int>(tuple.begin(), tuple.end()));
    return it == map_.end() ? default_ : it->second;
}

namespace {

// groups of r-tuples over the universe of A sharing an atomic type
std::vector<std::vector<std::vector<int>>> type_groups(const Structure& a, int r) {
    std::map<QfType, std::vector<std::vector<int>>> groups;
    if (a.size() == 0) return {};
    std::vector<int> t(static_cast<std::size_t>(r), 0);
    while (true) {
        groups[qf_type(a, t)].push_back(t);
        int p = r - 1;
        while (p >= 0 && ++t[static_cast<std::size_t>(p)] == a.size()) {
            t[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) break;
    }
    std::vector<std::vector<std::vector<int>>> out;
    for (auto& [type, tuples] : groups) out.push_back(std::move(tuples));
    return out;
}

bool group_monochromatic(const std::vector<int>& g, const std::vector<std::vector<int>>& tuples,
                         const Palette& palette) {
    int seen = -1;
    std::vector<int> image;
    for (const auto& t : tuples) {
        image.resize(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) image[i] = g[static_cast<std::size_t>(t[i])];
        int c = palette.color(image);
        if (seen < 0)
            seen = c;
        else if (c != seen)
            return false;
    }
    return true;
}

} // namespace

std::optional<Embedding> extract_indiscernible(const Structure& c, const Structure& a,
                                               const Palette& palette, bool iterated) {
    if (palette.arity() > a.size())
        fail(Errc::InvalidArgument, "palette arity exceeds |A|");
    const int r = palette.arity();
    auto groups = type_groups(a, r);
    std::vector<std::vector<int>> candidates = embedding_maps(a, c);

    if (iterated) {
        // one atomic type at a time, narrowing the candidate pool
        for (const auto& tuples : groups) {
            std::vector<std::vector<int>> next;
            for (auto& g : candidates)
                if (group_monochromatic(g, tuples, palette)) next.push_back(std::move(g));
            candidates = std::move(next);
            if (candidates.empty()) return std::nullopt;
        }
        return Embedding(a, c, candidates.front());
    }

    for (auto& g : candidates) {
        bool ok = true;
        for (const auto& tuples : groups)
            if (!group_monochromatic(g, tuples, palette)) { ok = false; break; }
        if (ok) return Embedding(a, c, std::move(g));
    }
    return std::nullopt;
}

} // namespace rwb
