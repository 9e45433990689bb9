#include "rwb/canonical.hpp"

#include <algorithm>
#include <map>

#include "rwb/errors.hpp"

namespace rwb {

namespace {

// Iterative color refinement followed by backtracking over cell splits.
// Colors start from constant membership; each round re-keys an element by
// its color together with the multiset of colored incidences per relation
// and position. Non-singleton cells are split by individualization and the
// minimum code over all discrete branches is kept. Certified against brute
// force at small sizes in the test suite.
struct Canonicalizer {
    const Structure& s;
    const Signature& sig;
    int n;
    std::vector<std::vector<std::vector<int>>> rel_tuples; // per relation: decoded tuples
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;

    explicit Canonicalizer(const Structure& st) : s(st), sig(st.signature()), n(st.size()) {
        rel_tuples.reserve(static_cast<std::size_t>(sig.relation_count()));
        for (int r = 0; r < sig.relation_count(); ++r) rel_tuples.push_back(s.tuples(r));
    }

    std::vector<int> initial_colors() const {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
        for (int c = 0; c < sig.constant_count(); ++c)
            keys[static_cast<std::size_t>(s.constant(c))].push_back(c);
        return rank_keys(keys, nullptr);
    }

    // Assign color ids 0..m-1 by sorted key order; keys already embed the
    // previous color when `prev` is given.
    static std::vector<int> rank_keys(const std::vector<std::vector<int>>& keys, const std::vector<int>* prev) {
        const std::size_t n = keys.size();
        std::vector<std::vector<int>> full(n);
        for (std::size_t i = 0; i < n; ++i) {
            full[i].reserve(keys[i].size() + 1);
            if (prev) full[i].push_back((*prev)[i]);
            full[i].insert(full[i].end(), keys[i].begin(), keys[i].end());
        }
        std::vector<int> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return full[static_cast<std::size_t>(a)] < full[static_cast<std::size_t>(b)]; });
        std::vector<int> colors(n);
        int next = -1;
        for (std::size_t at = 0; at < n; ++at) {
            int i = order[at];
            if (at == 0 || full[static_cast<std::size_t>(i)] != full[static_cast<std::size_t>(order[at - 1])]) ++next;
            colors[static_cast<std::size_t>(i)] = next;
        }
        return colors;
    }

    std::vector<int> refine(std::vector<int> colors) const {
        while (true) {
            std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
            for (int r = 0; r < sig.relation_count(); ++r) {
                const int arity = sig.arity(r);
                // per element and position: sorted list of color vectors of
                // incident tuples
                std::vector<std::vector<std::vector<int>>> inc(static_cast<std::size_t>(n));
                for (const auto& t : rel_tuples[static_cast<std::size_t>(r)]) {
                    std::vector<int> cv(static_cast<std::size_t>(arity) + 1);
                    for (int p = 0; p < arity; ++p)
                        cv[static_cast<std::size_t>(p) + 1] = colors[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
                    for (int p = 0; p < arity; ++p) {
                        cv[0] = p;
                        inc[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])].push_back(cv);
                    }
                }
                for (int x = 0; x < n; ++x) {
                    auto& v = inc[static_cast<std::size_t>(x)];
                    std::sort(v.begin(), v.end());
                    auto& key = keys[static_cast<std::size_t>(x)];
                    key.push_back(static_cast<int>(v.size()));
                    for (const auto& cv : v) key.insert(key.end(), cv.begin(), cv.end());
                }
            }
            std::vector<int> next = rank_keys(keys, &colors);
            if (next == colors) return colors;
            colors = std::move(next);
        }
    }

    static bool discrete(const std::vector<int>& colors) {
        std::vector<char> seen(colors.size(), 0);
        for (int c : colors) {
            if (seen[static_cast<std::size_t>(c)]) return false;
            seen[static_cast<std::size_t>(c)] = 1;
        }
        return true;
    }

    std::string encode(const std::vector<int>& perm) const {
        std::string out;
        out.push_back(static_cast<char>(n));
        std::vector<std::vector<int>> image;
        for (int r = 0; r < sig.relation_count(); ++r) {
            const int arity = sig.arity(r);
            image.clear();
            for (const auto& t : rel_tuples[static_cast<std::size_t>(r)]) {
                std::vector<int> m(static_cast<std::size_t>(arity));
                for (int p = 0; p < arity; ++p)
                    m[static_cast<std::size_t>(p)] = perm[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
                image.push_back(std::move(m));
            }
            std::sort(image.begin(), image.end());
            out.push_back(static_cast<char>(image.size() >> 8));
            out.push_back(static_cast<char>(image.size() & 0xff));
            for (const auto& t : image)
                for (int v : t) out.push_back(static_cast<char>(v));
        }
        for (int c = 0; c < sig.constant_count(); ++c)
            out.push_back(static_cast<char>(perm[static_cast<std::size_t>(s.constant(c))]));
        return out;
    }

    void descend(const std::vector<int>& colors) {
        if (discrete(colors)) {
            std::string code = encode(colors);
            if (!have_best || code < best) {
                best = std::move(code);
                best_perm = colors;
                have_best = true;
            }
            return;
        }
        // Split the smallest-colored non-singleton cell.
        std::vector<int> members;
        for (int c = 0; c < n; ++c) {
            members.clear();
            for (int x = 0; x < n; ++x)
                if (colors[static_cast<std::size_t>(x)] == c) members.push_back(x);
            if (members.size() >= 2) break;
        }
        for (int x : members) {
            std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
            for (int y = 0; y < n; ++y) keys[static_cast<std::size_t>(y)].push_back(y == x ? 0 : 1);
            descend(refine(rank_keys(keys, &colors)));
        }
    }

    void run() {
        if (n > 255) fail(Errc::ResourceLimit, "canonical form supports sizes up to 255");
        if (n == 0) {
            best = encode({});
            best_perm = {};
            have_best = true;
            return;
        }
        descend(refine(initial_colors()));
    }
};

} // namespace

CanonicalCode canonical_form(const Structure& s) {
    Canonicalizer c(s);
    c.run();
    return CanonicalCode{std::move(c.best)};
}

std::vector<int> canonical_labeling(const Structure& s) {
    Canonicalizer c(s);
    c.run();
    return c.best_perm;
}

Structure canonical_representative(const Structure& s) {
    return apply_permutation(s, canonical_labeling(s));
}

bool is_isomorphic(const Structure& a, const Structure& b) {
    if (!(a.signature() == b.signature())) fail(Errc::SignatureMismatch, "isomorphism endpoints disagree");
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace rwb
