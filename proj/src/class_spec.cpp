#include "rwb/class_spec.hpp"

#include <algorithm>

#include "rwb/embedding.hpp"
#include "rwb/errors.hpp"

namespace rwb {

namespace {

// --- ordered trees ("tree-meet-total") --------------------------------------
//
// Signature: anc (strict tree ancestry), < (strict linear order), R (meet of
// two ancestry-incomparable nodes), sep (ternary branch separation), constant
// root. Stored orders are strict; the reflexive closure is implied.

bool anc_le(const Structure& s, int anc, int x, int y) { // x tri y (reflexive)
    int t[2] = {x, y};
    return x == y || s.holds(anc, std::span<const int>(t, 2));
}

bool tree_predicate(const Structure& s) {
    const Signature& sig = s.signature();
    const int anc = sig.relation_index("anc");
    const int lt = sig.relation_index("<");
    const int rr = sig.relation_index("R");
    const int sep = sig.relation_index("sep");
    const int root_c = sig.constant_index("root");
    if (anc < 0 || lt < 0 || rr < 0 || sep < 0 || root_c < 0) return false;
    const int n = s.size();
    const int root = s.constant(root_c);

    auto ANC = [&](int x, int y) { int t[2] = {x, y}; return s.holds(anc, std::span<const int>(t, 2)); };
    auto LT = [&](int x, int y) { int t[2] = {x, y}; return s.holds(lt, std::span<const int>(t, 2)); };
    auto RR = [&](int x, int y, int z) { int t[3] = {x, y, z}; return s.holds(rr, std::span<const int>(t, 3)); };
    auto SEP = [&](int x, int y, int z) { int t[3] = {x, y, z}; return s.holds(sep, std::span<const int>(t, 3)); };

    // strict partial order with least element root; strict linear order <
    for (int x = 0; x < n; ++x) {
        if (ANC(x, x) || LT(x, x)) return false;
        if (x != root && !ANC(root, x)) return false;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            if (ANC(x, y) && ANC(y, x)) return false;
            if (LT(x, y) == LT(y, x)) return false; // total and antisymmetric
            if (ANC(x, y) && !LT(x, y)) return false;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                if (ANC(x, y) && ANC(y, z) && !ANC(x, z)) return false;
                if (LT(x, y) && LT(y, z) && !LT(x, z)) return false;
            }
        }
    // tree-like: ancestors of any node form a chain
    for (int x = 0; x < n; ++x)
        for (int y1 = 0; y1 < n; ++y1)
            for (int y2 = y1 + 1; y2 < n; ++y2) {
                if (y1 == x || y2 == x) continue;
                if (ANC(y1, x) && ANC(y2, x) && !ANC(y1, y2) && !ANC(y2, y1)) return false;
            }
    // meet in the reflexive closure: the greatest common ancestor-or-self
    auto rmeet = [&](int x, int y) -> int {
        for (int z = 0; z < n; ++z) {
            if (!(anc_le(s, anc, z, x) && anc_le(s, anc, z, y))) continue;
            bool maximal = true;
            for (int z2 = 0; z2 < n; ++z2)
                if (anc_le(s, anc, z2, x) && anc_le(s, anc, z2, y) && !anc_le(s, anc, z2, z)) {
                    maximal = false;
                    break;
                }
            if (maximal) return z;
        }
        return -1;
    };
    // R is exactly the meet relation on incomparable pairs, and meets exist
    for (int y1 = 0; y1 < n; ++y1)
        for (int y2 = 0; y2 < n; ++y2) {
            const bool incomparable = y1 != y2 && !ANC(y1, y2) && !ANC(y2, y1);
            int meet = incomparable ? rmeet(y1, y2) : -1;
            if (incomparable && meet < 0) return false; // meet totality
            for (int x = 0; x < n; ++x)
                if (RR(x, y1, y2) != (incomparable && x == meet)) return false;
        }
    // sep(x1,x2,x3): the branch point of {x1,x2} lies strictly above the
    // branch point of {x1,x3}, measured in the reflexive closure
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            for (int x3 = 0; x3 < n; ++x3) {
                int m12 = x1 == x2 ? -1 : rmeet(x1, x2);
                int m13 = rmeet(x1, x3);
                bool arrangement = m12 >= 0 && m13 >= 0 && m13 != m12 && ANC(m13, m12);
                if (SEP(x1, x2, x3) != arrangement) return false;
                // order convexity of sibling subtrees
                if (arrangement && LT(x1, x2) && !(LT(x3, x1) || LT(x2, x3))) return false;
            }
    return true;
}

Structure tree_complete(const Structure& s) {
    const Signature& sig = s.signature();
    const int anc = sig.relation_index("anc");
    const int rr = sig.relation_index("R");
    const int sep = sig.relation_index("sep");
    const int n = s.size();
    StructureBuilder b(s);
    auto ANC = [&](int x, int y) { int t[2] = {x, y}; return s.holds(anc, std::span<const int>(t, 2)); };
    auto le = [&](int x, int y) { return x == y || ANC(x, y); };
    // wipe derived tables
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int t[3] = {x, y, z};
                b.set(rr, std::span<const int>(t, 3), false);
                b.set(sep, std::span<const int>(t, 3), false);
            }
    // greatest common ancestor-or-self; -1 when none or not unique
    std::vector<std::vector<int>> rmeet(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int y1 = 0; y1 < n; ++y1)
        for (int y2 = 0; y2 < n; ++y2)
            for (int z = 0; z < n; ++z) {
                if (!(le(z, y1) && le(z, y2))) continue;
                bool maximal = true;
                for (int z2 = 0; z2 < n; ++z2)
                    if (le(z2, y1) && le(z2, y2) && !le(z2, z)) { maximal = false; break; }
                if (maximal) {
                    rmeet[static_cast<std::size_t>(y1)][static_cast<std::size_t>(y2)] = z;
                    break;
                }
            }
    for (int y1 = 0; y1 < n; ++y1)
        for (int y2 = 0; y2 < n; ++y2) {
            if (y1 == y2 || ANC(y1, y2) || ANC(y2, y1)) continue;
            int x = rmeet[static_cast<std::size_t>(y1)][static_cast<std::size_t>(y2)];
            if (x >= 0) {
                int t[3] = {x, y1, y2};
                b.set(rr, std::span<const int>(t, 3), true);
            }
        }
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            for (int x3 = 0; x3 < n; ++x3) {
                if (x1 == x2) continue;
                int m12 = rmeet[static_cast<std::size_t>(x1)][static_cast<std::size_t>(x2)];
                int m13 = rmeet[static_cast<std::size_t>(x1)][static_cast<std::size_t>(x3)];
                if (m12 >= 0 && m13 >= 0 && m13 != m12 && ANC(m13, m12)) {
                    int t[3] = {x1, x2, x3};
                    b.set(sep, std::span<const int>(t, 3), true);
                }
            }
    return std::move(b).build();
}

// Universal fragment of the tree axioms on a partially decided structure:
// order laws among the decided elements around the anchor. Sound pruning
// only; meet totality and the derived relations wait for the full check.
bool tree_partial_ok(const StructureBuilder& work, const std::vector<char>& allowed, int anchor) {
    const Signature& sig = work.signature();
    const int anc = sig.relation_index("anc");
    const int lt = sig.relation_index("<");
    const int root = work.constant(sig.constant_index("root"));
    auto A = [&](int x, int y) {
        int t[2] = {x, y};
        return work.holds(anc, std::span<const int>(t, 2));
    };
    auto L = [&](int x, int y) {
        int t[2] = {x, y};
        return work.holds(lt, std::span<const int>(t, 2));
    };
    if (A(anchor, anchor) || L(anchor, anchor)) return false;
    if (anchor != root && root >= 0 && root < static_cast<int>(allowed.size()) &&
        allowed[static_cast<std::size_t>(root)] && !A(root, anchor))
        return false;
    const int n = static_cast<int>(allowed.size());
    std::vector<int> in;
    for (int w = 0; w < n; ++w)
        if (allowed[static_cast<std::size_t>(w)] && w != anchor) in.push_back(w);
    for (int w : in) {
        if (A(anchor, w) && A(w, anchor)) return false;
        if (L(anchor, w) == L(w, anchor)) return false;
        if (A(anchor, w) && !L(anchor, w)) return false;
        if (A(w, anchor) && !L(w, anchor)) return false;
    }
    for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = 0; j < in.size(); ++j) {
            if (i == j) continue;
            const int w1 = in[i], w2 = in[j];
            // transitivity through / around the anchor
            if (A(anchor, w1) && A(w1, w2) && !A(anchor, w2)) return false;
            if (A(w1, anchor) && A(anchor, w2) && !A(w1, w2)) return false;
            if (A(w1, w2) && A(w2, anchor) && !A(w1, anchor)) return false;
            if (L(anchor, w1) && L(w1, w2) && !L(anchor, w2)) return false;
            if (L(w1, anchor) && L(anchor, w2) && !L(w1, w2)) return false;
            if (L(w1, w2) && L(w2, anchor) && !L(w1, anchor)) return false;
            // ancestors of any node form a chain
            if (A(w1, anchor) && A(w2, anchor) && w1 != w2 && !A(w1, w2) && !A(w2, w1)) return false;
            if (A(anchor, w1) && A(w2, w1) && !A(anchor, w2) && !A(w2, anchor)) return false;
        }
    return true;
}

const std::vector<CheckerInfo>& registry() {
    static const std::vector<CheckerInfo> checkers = [] {
        std::vector<CheckerInfo> v;
        v.push_back(CheckerInfo{"tree-meet-total", tree_predicate, {"R", "sep"}, tree_complete,
                                tree_partial_ok});
        return v;
    }();
    return checkers;
}

// Plain DFS embedding search restricted to target elements < limit, with one
// position forced to `anchor`. Small patterns only.
bool embeds_restricted(const Structure& f, const Structure& s, int anchor, int limit) {
    const int fn = f.size();
    if (fn == 0 || fn > limit) return false;
    const Signature& sig = f.signature();
    std::vector<int> map(static_cast<std::size_t>(fn), -1);
    std::vector<char> used(static_cast<std::size_t>(s.size()), 0);

    // consistency of all tuples within assigned prefix mentioning `depth`
    auto consistent = [&](int depth) {
        std::vector<int> t, img;
        for (int r = 0; r < sig.relation_count(); ++r) {
            const int arity = sig.arity(r);
            t.assign(static_cast<std::size_t>(arity), 0);
            while (true) {
                bool mentions = false, inprefix = true;
                for (int v : t) {
                    if (v == depth) mentions = true;
                    if (v > depth) { inprefix = false; break; }
                }
                if (mentions && inprefix) {
                    img.resize(static_cast<std::size_t>(arity));
                    for (int p = 0; p < arity; ++p) img[static_cast<std::size_t>(p)] = map[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
                    if (f.holds(r, t) != s.holds(r, img)) return false;
                }
                int p = arity - 1;
                while (p >= 0 && ++t[static_cast<std::size_t>(p)] == fn) {
                    t[static_cast<std::size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
            }
        }
        return true;
    };

    for (int c = 0; c < sig.constant_count(); ++c) {
        // constants must match; if the pattern's constant maps outside the
        // window the pattern cannot embed
        if (s.constant(c) >= limit) return false;
    }

    std::vector<int> forced(static_cast<std::size_t>(fn), -1);
    for (int c = 0; c < sig.constant_count(); ++c) {
        int& slot = forced[static_cast<std::size_t>(f.constant(c))];
        if (slot >= 0 && slot != s.constant(c)) return false;
        slot = s.constant(c);
    }

    bool found = false;
    auto dfs = [&](auto&& self, int depth, bool anchor_used) -> void {
        if (found) return;
        if (depth == fn) {
            if (anchor_used) found = true;
            return;
        }
        // not enough positions left to place the anchor
        if (!anchor_used) {
            bool can_reach = false;
            for (int p = depth; p < fn; ++p)
                if (forced[static_cast<std::size_t>(p)] < 0 || forced[static_cast<std::size_t>(p)] == anchor) { can_reach = true; break; }
            if (!can_reach) return;
        }
        const int lo = forced[static_cast<std::size_t>(depth)] >= 0 ? forced[static_cast<std::size_t>(depth)] : 0;
        const int hi = forced[static_cast<std::size_t>(depth)] >= 0 ? lo + 1 : limit;
        for (int cand = lo; cand < hi && !found; ++cand) {
            if (cand >= limit || used[static_cast<std::size_t>(cand)]) continue;
            map[static_cast<std::size_t>(depth)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            if (consistent(depth)) self(self, depth + 1, anchor_used || cand == anchor);
            used[static_cast<std::size_t>(cand)] = 0;
        }
        map[static_cast<std::size_t>(depth)] = -1;
    };
    dfs(dfs, 0, false);
    return found;
}

} // namespace

const CheckerInfo* find_checker(std::string_view name) {
    for (const auto& c : registry())
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string> checker_names() {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.name);
    return out;
}

bool is_member(const ClassSpec& spec, const Structure& s) {
    if (!(s.signature() == spec.signature)) fail(Errc::SignatureMismatch, "structure signature differs from class");
    for (const auto& f : spec.forbidden)
        if (embeds(f, s)) return false;
    if (!spec.checker.empty()) {
        const CheckerInfo* c = find_checker(spec.checker);
        if (!c) fail(Errc::UnknownChecker, spec.checker);
        return c->predicate(s);
    }
    return true;
}

bool is_member_anchored(const ClassSpec& spec, const Structure& s) {
    const int last = s.size() - 1;
    for (const auto& f : spec.forbidden)
        if (embeds_restricted(f, s, last, s.size())) return false;
    if (!spec.checker.empty()) {
        const CheckerInfo* c = find_checker(spec.checker);
        if (!c) fail(Errc::UnknownChecker, spec.checker);
        return c->predicate(s);
    }
    return true;
}

bool forbidden_hit_anchored(const ClassSpec& spec, const Structure& s, int anchor, int limit) {
    for (const auto& f : spec.forbidden)
        if (embeds_restricted(f, s, anchor, limit)) return true;
    return false;
}

} // namespace rwb
