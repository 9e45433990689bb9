#include "rwb/embedding.hpp"

#include <algorithm>

#include "rwb/errors.hpp"

namespace rwb {

namespace {

// Tuple-occurrence plan: for depth i, every (relation, source-tuple) with
// entries in 0..i that mentions i. Checking exactly these at each depth
// covers all tuples once the map is total.
struct SearchPlan {
    struct Check {
        int rel;
        std::vector<int> tuple; // source elements
    };
    std::vector<std::vector<Check>> at_depth;
    std::vector<int> forced; // element -> required image (constants), -1 free
};

SearchPlan make_plan(const Structure& a, const Structure& c) {
    if (!(a.signature() == c.signature())) fail(Errc::SignatureMismatch, "embedding endpoints disagree");
    const Signature& sig = a.signature();
    const int n = a.size();
    SearchPlan plan;
    plan.at_depth.resize(static_cast<std::size_t>(n));
    plan.forced.assign(static_cast<std::size_t>(n), -1);
    for (int k = 0; k < sig.constant_count(); ++k) {
        int src = a.constant(k);
        int dst = c.constant(k);
        if (plan.forced[static_cast<std::size_t>(src)] >= 0 && plan.forced[static_cast<std::size_t>(src)] != dst)
            plan.forced[static_cast<std::size_t>(src)] = -2; // conflicting constants: no embedding
        else if (plan.forced[static_cast<std::size_t>(src)] == -1)
            plan.forced[static_cast<std::size_t>(src)] = dst;
    }
    for (int r = 0; r < sig.relation_count(); ++r) {
        const int arity = sig.arity(r);
        if (n == 0) continue;
        std::vector<int> t(static_cast<std::size_t>(arity), 0);
        while (true) {
            int mx = 0;
            for (int v : t) mx = std::max(mx, v);
            plan.at_depth[static_cast<std::size_t>(mx)].push_back({r, t});
            int p = arity - 1;
            while (p >= 0 && ++t[static_cast<std::size_t>(p)] == n) {
                t[static_cast<std::size_t>(p)] = 0;
                --p;
            }
            if (p < 0) break;
        }
    }
    return plan;
}

struct Searcher {
    const Structure& a;
    const Structure& c;
    const SearchPlan& plan;
    std::vector<int> map;
    std::vector<char> used;
    std::vector<int> image; // scratch
    std::vector<std::vector<int>>* out;
    const int* partial = nullptr; // optional preassignment
    bool first_only = false;
    bool done = false;

    bool consistent_at(int depth) {
        for (const auto& chk : plan.at_depth[static_cast<std::size_t>(depth)]) {
            image.resize(chk.tuple.size());
            for (std::size_t p = 0; p < chk.tuple.size(); ++p)
                image[p] = map[static_cast<std::size_t>(chk.tuple[p])];
            if (a.holds(chk.rel, chk.tuple) != c.holds(chk.rel, image)) return false;
        }
        return true;
    }

    void dfs(int depth) {
        if (done) return;
        if (depth == a.size()) {
            out->push_back(map);
            if (first_only) done = true;
            return;
        }
        int forced = plan.forced[static_cast<std::size_t>(depth)];
        if (forced == -2) return;
        if (partial && partial[depth] >= 0) {
            if (forced >= 0 && forced != partial[depth]) return;
            forced = partial[depth];
        }
        const int lo = forced >= 0 ? forced : 0;
        const int hi = forced >= 0 ? forced + 1 : c.size();
        for (int cand = lo; cand < hi; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            map[static_cast<std::size_t>(depth)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            if (consistent_at(depth)) dfs(depth + 1);
            used[static_cast<std::size_t>(cand)] = 0;
            if (done) return;
        }
        map[static_cast<std::size_t>(depth)] = -1;
    }
};

std::vector<std::vector<int>> run_search(const Structure& a, const Structure& c, const int* partial,
                                         bool first_only) {
    SearchPlan plan = make_plan(a, c);
    std::vector<std::vector<int>> out;
    if (a.size() > c.size()) return out;
    Searcher s{a, c, plan, std::vector<int>(static_cast<std::size_t>(a.size()), -1),
               std::vector<char>(static_cast<std::size_t>(c.size()), 0), {}, &out, partial, first_only};
    s.dfs(0);
    return out;
}

} // namespace

Embedding::Embedding(Structure source, Structure target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!is_embedding_map(source_, target_, map_))
        fail(Errc::InvalidArgument, "map is not an embedding");
}

bool Embedding::is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
        if (map_[i] != static_cast<int>(i)) return false;
    return source_ == target_;
}

Embedding compose(const Embedding& f, const Embedding& g) {
    if (!(f.target() == g.source())) fail(Errc::SignatureMismatch, "composition endpoints disagree");
    std::vector<int> m(static_cast<std::size_t>(f.source().size()));
    for (int i = 0; i < f.source().size(); ++i) m[static_cast<std::size_t>(i)] = g(f(i));
    return Embedding(f.source(), g.target(), std::move(m));
}

bool is_embedding_map(const Structure& a, const Structure& c, std::span<const int> map) {
    if (!(a.signature() == c.signature())) return false;
    if (static_cast<int>(map.size()) != a.size()) return false;
    std::vector<char> used(static_cast<std::size_t>(c.size()), 0);
    for (int v : map) {
        if (v < 0 || v >= c.size() || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(v)] = 1;
    }
    const Signature& sig = a.signature();
    for (int k = 0; k < sig.constant_count(); ++k)
        if (map[static_cast<std::size_t>(a.constant(k))] != c.constant(k)) return false;
    std::vector<int> image;
    for (int r = 0; r < sig.relation_count(); ++r) {
        const int arity = sig.arity(r);
        if (a.size() == 0) continue;
        std::vector<int> t(static_cast<std::size_t>(arity), 0);
        while (true) {
            image.resize(static_cast<std::size_t>(arity));
            for (int p = 0; p < arity; ++p) image[static_cast<std::size_t>(p)] = map[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
            if (a.holds(r, t) != c.holds(r, image)) return false;
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

std::vector<std::vector<int>> embedding_maps(const Structure& a, const Structure& c) {
    return run_search(a, c, nullptr, false);
}

std::vector<Embedding> enumerate_embeddings(const Structure& a, const Structure& c) {
    std::vector<Embedding> out;
    for (auto& m : run_search(a, c, nullptr, false)) out.emplace_back(a, c, std::move(m));
    return out;
}

bool embeds(const Structure& a, const Structure& c) {
    return !run_search(a, c, nullptr, true).empty();
}

std::vector<std::vector<int>> embedding_maps_extending(const Structure& a, const Structure& c,
                                                       std::span<const int> partial, bool first_only) {
    if (static_cast<int>(partial.size()) != a.size()) fail(Errc::InvalidArgument, "partial map size mismatch");
    return run_search(a, c, partial.data(), first_only);
}

std::vector<Embedding> automorphisms(const Structure& s) {
    return enumerate_embeddings(s, s);
}

std::optional<Embedding> find_involution(const Structure& s) {
    for (auto& m : embedding_maps(s, s)) {
        bool ident = true;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != static_cast<int>(i)) { ident = false; break; }
        if (ident) continue;
        bool invol = true;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[static_cast<std::size_t>(m[i])] != static_cast<int>(i)) { invol = false; break; }
        if (invol) return Embedding(s, s, std::move(m));
    }
    return std::nullopt;
}

} // namespace rwb
