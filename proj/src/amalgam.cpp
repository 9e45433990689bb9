#include "rwb/amalgam.hpp"

#include <algorithm>

#include "pattern_tables.hpp"
#include "rwb/embedding.hpp"
#include "rwb/errors.hpp"

namespace rwb {

namespace {

struct CrossTuple {
    int rel;
    std::vector<int> tuple; // over merged universe
};

// The undecided tuples of one fresh element, grouped by its left partners;
// a group is fully decided before the next partner starts, so the anchored
// probes only ever read decided bits.
struct SubStage {
    int partner; // left element newly covered by this group
    std::vector<CrossTuple> tuples;
};

struct Stage {
    int anchor; // the fresh merged element this stage decides
    std::vector<SubStage> subs;
};

// Search state for one identification pattern.
struct Completion {
    const ClassSpec* spec = nullptr;
    const CheckerInfo* checker = nullptr;
    const detail::PatternTables* tables = nullptr;
    StructureBuilder* work = nullptr;
    const Structure* left_side = nullptr;
    const Structure* right_side = nullptr;
    std::vector<int> g_left;
    std::vector<int> g_right;
    long* nodes = nullptr;
    long budget = 0;
    AmalgamResult* out = nullptr;

    std::vector<Stage> stages;
    std::vector<char> base_allowed;  // decided against any anchor from the start:
                                     // left elements inside the right image
    std::vector<char> anchors_done;  // fresh elements fully decided so far

    bool finalize() {
        StructureBuilder snapshot = *work;
        Structure cand = std::move(snapshot).build();
        if (checker && checker->complete) {
            // derived relations change globally: verify everything
            cand = checker->complete(cand);
            if (!is_member(*spec, cand)) return false;
            if (!is_embedding_map(*left_side, cand, g_left)) return false;
            if (!is_embedding_map(*right_side, cand, g_right)) return false;
        } else if (checker) {
            if (!checker->predicate(cand)) return false;
        }
        // without a checker the stage probes are complete: any forbidden
        // embedding would use a fresh element and only decided companions,
        // and the inclusions are embeddings because cross bits never touch
        // within-side tuples
        out->found = true;
        out->amalgam = cand;
        out->g_left = g_left;
        out->g_right = g_right;
        return true;
    }

    bool dfs_stage(std::size_t stage) {
        if (stage == stages.size()) return finalize();
        Stage& st = stages[stage];
        std::vector<char> mask = base_allowed;
        for (std::size_t i = 0; i < anchors_done.size(); ++i)
            if (anchors_done[i]) mask[i] = 1;
        mask[static_cast<std::size_t>(st.anchor)] = 1;
        return dfs_sub(stage, 0, 0, mask);
    }

    bool dfs_sub(std::size_t stage, std::size_t sub, std::size_t pos, std::vector<char>& mask) {
        Stage& st = stages[stage];
        if (sub == st.subs.size()) {
            anchors_done[static_cast<std::size_t>(st.anchor)] = 1;
            bool ok = dfs_stage(stage + 1);
            anchors_done[static_cast<std::size_t>(st.anchor)] = 0;
            return ok;
        }
        SubStage& ss = st.subs[sub];
        if (pos == ss.tuples.size()) {
            // partner group decided: probe with the partner now visible
            mask[static_cast<std::size_t>(ss.partner)] = 1;
            bool pruned = false;
            if (!ss.tuples.empty()) {
                pruned = tables ? fast_probe(mask, st.anchor, ss.partner)
                                : forbidden_probe_set(*spec, *work, mask, st.anchor);
                if (!pruned && checker && checker->partial_ok &&
                    !checker->partial_ok(*work, mask, st.anchor))
                    pruned = true;
            }
            bool ok = !pruned && dfs_sub(stage, sub + 1, 0, mask);
            mask[static_cast<std::size_t>(ss.partner)] = 0;
            return ok;
        }
        for (int bit = 0; bit <= 1; ++bit) {
            if (++*nodes > budget) fail(Errc::ResourceLimit, "amalgam search budget exhausted");
            work->set(ss.tuples[pos].rel, ss.tuples[pos].tuple, bit != 0);
            if (dfs_sub(stage, sub, pos + 1, mask)) return true;
        }
        work->set(ss.tuples[pos].rel, ss.tuples[pos].tuple, false);
        return false;
    }

    // only the (anchor, partner) bits are new, so violations of patterns up
    // to size 3 either use both or were checked at an earlier substage
    bool fast_probe(const std::vector<char>& mask, int anchor, int partner) const {
        auto bit = [&](int x, int y, int r) {
            int t[2] = {x, y};
            return work->holds(r, std::span<const int>(t, 2));
        };
        int loc2[2] = {anchor, partner};
        std::uint32_t w2 = detail::pack_pattern_bits(
            tables->rels, 2, [&](int r, int i, int j) { return bit(loc2[i], loc2[j], r); });
        if (tables->bad2[w2]) return true;
        for (int w = 0; w < static_cast<int>(mask.size()); ++w) {
            if (!mask[static_cast<std::size_t>(w)] || w == anchor || w == partner) continue;
            int loc3[3] = {anchor, partner, w};
            std::uint32_t w3 = detail::pack_pattern_bits(
                tables->rels, 3, [&](int r, int i, int j) { return bit(loc3[i], loc3[j], r); });
            if (tables->bad3[w3]) return true;
        }
        return false;
    }

    static bool forbidden_probe_set(const ClassSpec& spec, const StructureBuilder& s,
                                    const std::vector<char>& allowed, int anchor);
};

bool Completion::forbidden_probe_set(const ClassSpec& spec, const StructureBuilder& s,
                                     const std::vector<char>& allowed, int anchor) {
    for (const auto& f : spec.forbidden) {
        const int fn = f.size();
        if (fn == 0) continue;
        int allowed_count = 0;
        for (char a : allowed) allowed_count += a ? 1 : 0;
        if (fn > allowed_count) continue;
        std::vector<int> map(static_cast<std::size_t>(fn), -1);
        std::vector<char> used(allowed.size(), 0);
        const Signature& sig = spec.signature;
        std::vector<int> img;
        auto consistent = [&](int depth) {
            std::vector<int> t;
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
                        for (int p = 0; p < arity; ++p)
                            img[static_cast<std::size_t>(p)] = map[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
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
        bool found = false;
        auto dfs = [&](auto&& self, int depth, bool anchor_used) -> void {
            if (found) return;
            if (depth == fn) {
                found = anchor_used;
                return;
            }
            for (int cand = 0; cand < static_cast<int>(allowed.size()) && !found; ++cand) {
                if (!allowed[static_cast<std::size_t>(cand)] || used[static_cast<std::size_t>(cand)]) continue;
                map[static_cast<std::size_t>(depth)] = cand;
                used[static_cast<std::size_t>(cand)] = 1;
                if (consistent(depth)) self(self, depth + 1, anchor_used || cand == anchor);
                used[static_cast<std::size_t>(cand)] = 0;
            }
            map[static_cast<std::size_t>(depth)] = -1;
        };
        dfs(dfs, 0, false);
        if (found) return true;
    }
    return false;
}

} // namespace

AmalgamResult find_amalgam(const ClassSpec& spec, const Span& span, long node_budget) {
    AmalgamResult result;
    const Signature& sig = spec.signature;
    if (!(span.base.signature() == sig) || !(span.left.signature() == sig) || !(span.right.signature() == sig))
        fail(Errc::SignatureMismatch, "span signatures differ from class");
    if (!is_embedding_map(span.base, span.left, span.left_map) ||
        !is_embedding_map(span.base, span.right, span.right_map))
        fail(Errc::InvalidArgument, "span maps are not embeddings");

    const CheckerInfo* checker = nullptr;
    if (!spec.checker.empty()) {
        checker = find_checker(spec.checker);
        if (!checker) fail(Errc::UnknownChecker, spec.checker);
    }
    const detail::PatternTables* tables = detail::pattern_tables_for(spec);
    std::vector<char> rel_free(static_cast<std::size_t>(sig.relation_count()), 1);
    if (checker && checker->complete)
        for (const auto& name : checker->derived_relations) {
            int r = sig.relation_index(name);
            if (r >= 0) rel_free[static_cast<std::size_t>(r)] = 0;
        }

    const int nl = span.left.size();
    const int nb = span.base.size();
    std::vector<char> in_left_base(static_cast<std::size_t>(nl), 0);
    for (int b = 0; b < nb; ++b) in_left_base[static_cast<std::size_t>(span.left_map[static_cast<std::size_t>(b)])] = 1;
    std::vector<int> left_nonbase;
    for (int u = 0; u < nl; ++u)
        if (!in_left_base[static_cast<std::size_t>(u)]) left_nonbase.push_back(u);

    std::vector<char> in_right_base(static_cast<std::size_t>(span.right.size()), 0);
    std::vector<int> base_of_right(static_cast<std::size_t>(span.right.size()), -1);
    for (int b = 0; b < nb; ++b) {
        in_right_base[static_cast<std::size_t>(span.right_map[static_cast<std::size_t>(b)])] = 1;
        base_of_right[static_cast<std::size_t>(span.right_map[static_cast<std::size_t>(b)])] = b;
    }
    std::vector<int> right_fresh;
    for (int v = 0; v < span.right.size(); ++v)
        if (!in_right_base[static_cast<std::size_t>(v)]) right_fresh.push_back(v);
    const int nrf = static_cast<int>(right_fresh.size());

    long nodes = 0;

    // decoded tables are reused across every identification pattern
    std::vector<std::vector<std::vector<int>>> left_tuples, right_tuples;
    for (int r = 0; r < sig.relation_count(); ++r) {
        left_tuples.push_back(span.left.tuples(r));
        right_tuples.push_back(span.right.tuples(r));
    }

    // identification pattern: per fresh right element, -1 or a left-nonbase
    // element; enumerate by DFS, fresh-first so the free pattern leads
    std::vector<int> ident(static_cast<std::size_t>(nrf), -1);
    std::vector<char> ident_used(static_cast<std::size_t>(nl), 0);

    // right element -> merged element under the current pattern
    auto make_maps = [&](std::vector<int>& g_right, int& merged_size) {
        g_right.assign(static_cast<std::size_t>(span.right.size()), -1);
        for (int b = 0; b < nb; ++b)
            g_right[static_cast<std::size_t>(span.right_map[static_cast<std::size_t>(b)])] =
                span.left_map[static_cast<std::size_t>(b)];
        int next = nl;
        for (int j = 0; j < nrf; ++j) {
            int rv = right_fresh[static_cast<std::size_t>(j)];
            if (ident[static_cast<std::size_t>(j)] >= 0)
                g_right[static_cast<std::size_t>(rv)] = ident[static_cast<std::size_t>(j)];
            else
                g_right[static_cast<std::size_t>(rv)] = next++;
        }
        merged_size = next;
    };

    // right tuples fully landing inside the left universe must agree
    auto pattern_consistent = [&](const std::vector<int>& g_right) {
        std::vector<int> img;
        for (int r = 0; r < sig.relation_count(); ++r) {
            const int arity = sig.arity(r);
            if (!rel_free[static_cast<std::size_t>(r)] && checker && checker->complete) continue;
            if (span.right.size() == 0) continue;
            std::vector<int> t(static_cast<std::size_t>(arity), 0);
            while (true) {
                bool inside = true;
                for (int v : t)
                    if (g_right[static_cast<std::size_t>(v)] >= nl) { inside = false; break; }
                if (inside) {
                    img.resize(static_cast<std::size_t>(arity));
                    for (int p = 0; p < arity; ++p)
                        img[static_cast<std::size_t>(p)] = g_right[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
                    if (span.right.holds(r, t) != span.left.holds(r, img)) return false;
                }
                int p = arity - 1;
                while (p >= 0 && ++t[static_cast<std::size_t>(p)] == span.right.size()) {
                    t[static_cast<std::size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
            }
        }
        // constants already agree: both sides embed the base and constants
        // lie in the base image of member structures... unless a side owns
        // constants outside the base; those merge only if images collide
        for (int c = 0; c < sig.constant_count(); ++c) {
            if (g_right[static_cast<std::size_t>(span.right.constant(c))] != span.left.constant(c)) return false;
        }
        return true;
    };

    auto try_pattern = [&]() -> bool {
        std::vector<int> g_right;
        int merged_size = 0;
        make_maps(g_right, merged_size);
        if (!pattern_consistent(g_right)) return false;

        StructureBuilder work(sig, merged_size);
        // left relations
        for (int r = 0; r < sig.relation_count(); ++r)
            for (const auto& t : left_tuples[static_cast<std::size_t>(r)]) work.set(r, t);
        // transported right relations (free relations; derived ones get
        // recomputed by the completion, but transport them anyway so the
        // checker-less path sees them)
        std::vector<int> img;
        for (int r = 0; r < sig.relation_count(); ++r) {
            const int arity = sig.arity(r);
            for (const auto& t : right_tuples[static_cast<std::size_t>(r)]) {
                img.resize(static_cast<std::size_t>(arity));
                for (int p = 0; p < arity; ++p)
                    img[static_cast<std::size_t>(p)] = g_right[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
                work.set(r, img);
            }
        }
        for (int c = 0; c < sig.constant_count(); ++c) work.set_constant(c, span.left.constant(c));

        // fresh merged elements, in merged order
        std::vector<int> fresh_merged;
        for (int m = nl; m < merged_size; ++m) fresh_merged.push_back(m);

        // undetermined cross tuples: touching >= 1 left element outside the
        // right image and >= 1 fresh merged element
        std::vector<char> right_covered(static_cast<std::size_t>(merged_size), 0);
        for (int v = 0; v < span.right.size(); ++v) right_covered[static_cast<std::size_t>(g_right[static_cast<std::size_t>(v)])] = 1;

        Completion comp;
        comp.spec = &spec;
        comp.checker = checker;
        comp.tables = tables;
        comp.work = &work;
        comp.left_side = &span.left;
        comp.right_side = &span.right;
        comp.g_left.resize(static_cast<std::size_t>(nl));
        for (int u = 0; u < nl; ++u) comp.g_left[static_cast<std::size_t>(u)] = u;
        comp.g_right = g_right;
        comp.nodes = &nodes;
        comp.budget = node_budget;
        comp.out = &result;
        comp.anchors_done.assign(static_cast<std::size_t>(merged_size), 0);
        comp.base_allowed.assign(static_cast<std::size_t>(merged_size), 0);
        for (int u = 0; u < nl; ++u)
            if (right_covered[static_cast<std::size_t>(u)]) comp.base_allowed[static_cast<std::size_t>(u)] = 1;

        // substage plan: bucket cross tuples per (fresh anchor, last partner)
        comp.stages.resize(fresh_merged.size());
        for (std::size_t s = 0; s < fresh_merged.size(); ++s)
            comp.stages[s].anchor = fresh_merged[s];
        std::vector<std::vector<std::vector<CrossTuple>>> buckets(
            fresh_merged.size(), std::vector<std::vector<CrossTuple>>(static_cast<std::size_t>(nl)));
        for (int r = 0; r < sig.relation_count(); ++r) {
            if (!rel_free[static_cast<std::size_t>(r)]) continue;
            const int arity = sig.arity(r);
            if (merged_size == 0) continue;
            std::vector<int> t(static_cast<std::size_t>(arity), 0);
            while (true) {
                int last_partner = -1;
                int max_fresh = -1;
                for (int v : t) {
                    if (v < nl && !right_covered[static_cast<std::size_t>(v)]) last_partner = std::max(last_partner, v);
                    if (v >= nl) max_fresh = std::max(max_fresh, v);
                }
                if (last_partner >= 0 && max_fresh >= 0)
                    buckets[static_cast<std::size_t>(max_fresh - nl)][static_cast<std::size_t>(last_partner)]
                        .push_back({r, t});
                int p = arity - 1;
                while (p >= 0 && ++t[static_cast<std::size_t>(p)] == merged_size) {
                    t[static_cast<std::size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
            }
        }
        for (std::size_t s = 0; s < fresh_merged.size(); ++s)
            for (int u = 0; u < nl; ++u)
                if (!buckets[s][static_cast<std::size_t>(u)].empty())
                    comp.stages[s].subs.push_back(SubStage{u, std::move(buckets[s][static_cast<std::size_t>(u)])});
        return comp.dfs_stage(0);
    };

    // enumerate identification patterns, all-fresh first
    auto patterns = [&](auto&& self, int j) -> bool {
        if (j == nrf) return try_pattern();
        // fresh
        ident[static_cast<std::size_t>(j)] = -1;
        if (self(self, j + 1)) return true;
        for (int u : left_nonbase) {
            if (ident_used[static_cast<std::size_t>(u)]) continue;
            ident[static_cast<std::size_t>(j)] = u;
            ident_used[static_cast<std::size_t>(u)] = 1;
            bool ok = self(self, j + 1);
            ident_used[static_cast<std::size_t>(u)] = 0;
            ident[static_cast<std::size_t>(j)] = -1;
            if (ok) return true;
        }
        return false;
    };
    patterns(patterns, 0);
    result.nodes = nodes;
    return result;
}

} // namespace rwb
