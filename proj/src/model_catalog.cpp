#include "rwb/model_catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "pattern_tables.hpp"
#include "rwb/errors.hpp"
#include "rwb/worker_pool.hpp"

namespace rwb {

namespace {

struct GroupTuple {
    int rel;
    std::vector<int> tuple;
};

// Forbidden-pattern probe on a partially decided extension: does any
// forbidden structure embed into `work` using only `allowed` elements and
// including `anchor`?
bool forbidden_hit_partial(const ClassSpec& spec, const StructureBuilder& work,
                           const std::vector<char>& allowed, int anchor) {
    const Signature& sig = spec.signature;
    int allowed_count = 0;
    for (char a : allowed) allowed_count += a;
    for (const auto& f : spec.forbidden) {
        const int fn = f.size();
        if (fn == 0 || fn > allowed_count) continue;
        std::vector<int> map(static_cast<std::size_t>(fn), -1);
        std::vector<char> used(allowed.size(), 0);
        std::vector<int> forced(static_cast<std::size_t>(fn), -1);
        bool impossible = false;
        for (int c = 0; c < sig.constant_count() && !impossible; ++c) {
            const int target = work.constant(c);
            if (target < 0 || !allowed[static_cast<std::size_t>(target)]) { impossible = true; break; }
            int& slot = forced[static_cast<std::size_t>(f.constant(c))];
            if (slot >= 0 && slot != target) { impossible = true; break; }
            slot = target;
        }
        if (impossible) continue;

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
                        if (f.holds(r, t) != work.holds(r, img)) return false;
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
            const int pin = forced[static_cast<std::size_t>(depth)];
            const int lo = pin >= 0 ? pin : 0;
            const int hi = pin >= 0 ? pin + 1 : static_cast<int>(allowed.size());
            for (int cand = lo; cand < hi && !found; ++cand) {
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

class Extender {
public:
    Extender(const ClassSpec& spec, const CheckerInfo* checker)
        : spec_(spec), checker_(checker), tables_(detail::pattern_tables_for(spec)) {
        rel_free_.assign(static_cast<std::size_t>(spec.signature.relation_count()), 1);
        if (checker_ && checker_->complete)
            for (const auto& name : checker_->derived_relations) {
                int r = spec.signature.relation_index(name);
                if (r >= 0) rel_free_[static_cast<std::size_t>(r)] = 0;
            }
    }

    // All member one-point extensions of `parent` (not deduplicated).
    template <typename Sink>
    void extend(const Structure& parent, Sink&& sink) const {
        const Signature& sig = spec_.signature;
        const int k = parent.size(); // new element index
        StructureBuilder work(sig, k + 1);
        for (int r = 0; r < sig.relation_count(); ++r)
            for (const auto& t : parent.tuples(r)) work.set(r, t);
        for (int c = 0; c < sig.constant_count(); ++c) work.set_constant(c, parent.constant(c));

        // groups[g]: undecided tuples whose largest non-new element is g-1
        std::vector<std::vector<GroupTuple>> groups(static_cast<std::size_t>(k) + 1);
        for (int r = 0; r < sig.relation_count(); ++r) {
            if (!rel_free_[static_cast<std::size_t>(r)]) continue;
            const int arity = sig.arity(r);
            std::vector<int> t(static_cast<std::size_t>(arity), 0);
            while (true) {
                bool has_new = false;
                int mx = -1;
                for (int v : t) {
                    if (v == k) has_new = true;
                    else mx = std::max(mx, v);
                }
                if (has_new) groups[static_cast<std::size_t>(mx) + 1].push_back({r, t});
                int p = arity - 1;
                while (p >= 0 && ++t[static_cast<std::size_t>(p)] == k + 1) {
                    t[static_cast<std::size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
            }
        }

        std::vector<char> allowed(static_cast<std::size_t>(k) + 1, 0);
        allowed[static_cast<std::size_t>(k)] = 1;
        dfs(work, groups, allowed, 0, k, sink);
    }

    // Member structures of size 1 (seeds for the augmentation).
    template <typename Sink>
    void seeds(Sink&& sink) const {
        const Signature& sig = spec_.signature;
        std::vector<GroupTuple> diag;
        for (int r = 0; r < sig.relation_count(); ++r) {
            if (!rel_free_[static_cast<std::size_t>(r)]) continue;
            diag.push_back({r, std::vector<int>(static_cast<std::size_t>(sig.arity(r)), 0)});
        }
        const std::size_t masks = std::size_t(1) << diag.size();
        for (std::size_t mask = 0; mask < masks; ++mask) {
            StructureBuilder b(sig, 1);
            for (std::size_t i = 0; i < diag.size(); ++i)
                if ((mask >> i) & 1) b.set(diag[i].rel, diag[i].tuple);
            for (int c = 0; c < sig.constant_count(); ++c) b.set_constant(c, 0);
            Structure cand = std::move(b).build();
            if (checker_ && checker_->complete) cand = checker_->complete(cand);
            if (is_member(spec_, cand)) sink(cand);
        }
    }

private:
    const ClassSpec& spec_;
    const CheckerInfo* checker_;
    const detail::PatternTables* tables_;
    std::vector<char> rel_free_;

    // incremental probe: only the (new, gi-1) bits changed at group gi, so
    // check that pair plus its triples against earlier-decided elements
    bool fast_group_hit(const StructureBuilder& work, int gi, int k) const {
        if (gi < 1) return false; // loops on the new element surface at group 1
        const int partner = gi - 1;
        auto bit = [&](int x, int y, int r) {
            int t[2] = {x, y};
            return work.holds(r, std::span<const int>(t, 2));
        };
        int loc2[2] = {k, partner};
        std::uint32_t w2 = detail::pack_pattern_bits(
            tables_->rels, 2, [&](int r, int i, int j) { return bit(loc2[i], loc2[j], r); });
        if (tables_->bad2[w2]) return true;
        for (int w = 0; w < partner; ++w) {
            int loc3[3] = {k, partner, w};
            std::uint32_t w3 = detail::pack_pattern_bits(
                tables_->rels, 3, [&](int r, int i, int j) { return bit(loc3[i], loc3[j], r); });
            if (tables_->bad3[w3]) return true;
        }
        return false;
    }

    template <typename Sink>
    void dfs(StructureBuilder& work, const std::vector<std::vector<GroupTuple>>& groups,
             std::vector<char>& allowed, int gi, int k, Sink&& sink) const {
        if (gi == static_cast<int>(groups.size())) {
            StructureBuilder snapshot = work;
            Structure cand = std::move(snapshot).build();
            if (checker_ && checker_->complete) {
                cand = checker_->complete(cand);
                if (is_member_anchored(spec_, cand)) sink(cand);
            } else if (!checker_ || checker_->predicate(cand)) {
                // forbidden part already verified group by group
                sink(cand);
            }
            return;
        }
        const auto& grp = groups[static_cast<std::size_t>(gi)];
        const std::size_t masks = std::size_t(1) << grp.size();
        if (grp.size() > 20) fail(Errc::ResourceLimit, "extension group too large (arity too high?)");
        for (std::size_t mask = 0; mask < masks; ++mask) {
            for (std::size_t i = 0; i < grp.size(); ++i)
                work.set(grp[i].rel, grp[i].tuple, ((mask >> i) & 1) != 0);
            bool pruned = tables_ ? fast_group_hit(work, gi, k)
                                  : forbidden_hit_partial(spec_, work, allowed, k);
            if (!pruned && checker_ && checker_->partial_ok && !checker_->partial_ok(work, allowed, k))
                pruned = true;
            if (!pruned) {
                if (gi < static_cast<int>(groups.size()) - 1) {
                    allowed[static_cast<std::size_t>(gi)] = 1;
                    dfs(work, groups, allowed, gi + 1, k, sink);
                    allowed[static_cast<std::size_t>(gi)] = 0;
                } else {
                    dfs(work, groups, allowed, gi + 1, k, sink);
                }
            }
        }
        for (std::size_t i = 0; i < grp.size(); ++i) work.set(grp[i].rel, grp[i].tuple, false);
    }
};

} // namespace

std::vector<const Structure*> ModelCatalog::all_up_to(int n) const {
    std::vector<const Structure*> out;
    for (int s = 1; s <= n && s <= max_size_; ++s)
        for (const auto& m : by_size_[static_cast<std::size_t>(s)]) out.push_back(&m);
    return out;
}

long ModelCatalog::total() const {
    long t = 0;
    for (const auto& v : by_size_) t += static_cast<long>(v.size());
    return t;
}

ModelCatalog enumerate_models(const ClassSpec& spec, int max_size, int workers, CatalogLimits limits) {
    if (max_size < 0) fail(Errc::InvalidArgument, "negative size bound");
    const CheckerInfo* checker = nullptr;
    if (!spec.checker.empty()) {
        checker = find_checker(spec.checker);
        if (!checker) fail(Errc::UnknownChecker, spec.checker);
    }
    for (const auto& f : spec.forbidden)
        if (!(f.signature() == spec.signature))
            fail(Errc::SignatureMismatch, "forbidden structure signature differs from class");

    Extender ext(spec, checker);
    std::vector<std::vector<Structure>> by_size(static_cast<std::size_t>(max_size) + 1);
    long total = 0;

    if (max_size >= 1) {
        std::map<CanonicalCode, Structure> seen;
        ext.seeds([&](const Structure& cand) {
            seen.emplace(canonical_form(cand), canonical_representative(cand));
        });
        for (auto& [code, s] : seen) by_size[1].push_back(s);
        total += static_cast<long>(by_size[1].size());
    }

    for (int size = 2; size <= max_size; ++size) {
        const auto& parents = by_size[static_cast<std::size_t>(size - 1)];
        const int np = static_cast<int>(parents.size());
        std::vector<std::map<CanonicalCode, Structure>> chunk_seen(static_cast<std::size_t>(std::max(workers, 1)));
        run_chunked(np, workers, [&](int chunk, int begin, int end) {
            auto& seen = chunk_seen[static_cast<std::size_t>(chunk)];
            for (int p = begin; p < end; ++p)
                ext.extend(parents[static_cast<std::size_t>(p)], [&](const Structure& cand) {
                    CanonicalCode code = canonical_form(cand);
                    if (!seen.count(code)) seen.emplace(std::move(code), canonical_representative(cand));
                });
        });
        std::map<CanonicalCode, Structure> merged;
        for (auto& m : chunk_seen)
            for (auto& [code, s] : m) merged.emplace(code, s);
        auto& out = by_size[static_cast<std::size_t>(size)];
        out.reserve(merged.size());
        for (auto& [code, s] : merged) out.push_back(s);
        total += static_cast<long>(out.size());
        if (total > limits.max_models)
            fail(Errc::ResourceLimit, "model count cap exceeded at size " + std::to_string(size));
    }
    return ModelCatalog(spec, max_size, std::move(by_size));
}

} // namespace rwb
