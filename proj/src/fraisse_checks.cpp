#include "rwb/fraisse_checks.hpp"

#include "pattern_tables.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "rwb/embedding.hpp"
#include "rwb/errors.hpp"
#include "rwb/worker_pool.hpp"

namespace rwb {

namespace {

// ---------------------------------------------------------------------------
// Span enumeration. A span up to isomorphism is (A0; f1 : A0 -> A1;
// f2 : A0 -> A2) with A0, A1, A2 catalog models. The left side ranges over
// one embedding per image subset (relabeling A1 normalizes f1), the right
// side over all embeddings (covering automorphism twists of A0).
// ---------------------------------------------------------------------------

struct Ext {
    int model_size = 0;
    int model_index = 0;           // within catalog size list
    const Structure* model = nullptr;
    std::vector<int> base_map;     // base element -> model element
};

struct ExtTable {
    std::vector<Ext> reps; // one per (model, image subset)
    std::vector<Ext> all;  // every embedding
};

ExtTable collect_extensions(const ModelCatalog& catalog, const Structure& base, int n) {
    ExtTable table;
    for (int size = base.size(); size <= n; ++size) {
        const auto& models = catalog.models(size);
        for (int mi = 0; mi < static_cast<int>(models.size()); ++mi) {
            const Structure& m = models[static_cast<std::size_t>(mi)];
            std::set<std::vector<int>> images_seen;
            for (auto& emb : embedding_maps(base, m)) {
                std::vector<int> image = emb;
                std::sort(image.begin(), image.end());
                Ext e{size, mi, &m, emb};
                table.all.push_back(e);
                if (images_seen.insert(image).second) table.reps.push_back(std::move(e));
            }
        }
    }
    return table;
}

// ---------------------------------------------------------------------------
// Fast path: binary signatures, forbidden patterns of size <= 3, no checker.
// The merged structure of an identification-free span is completed by a
// deterministic template (closure through base witnesses plus a per-relation
// default), and validity is decided by constant-time lookups of 1/2/3-element
// induced patterns against precomputed bad-signature tables. A left extension
// whose checks pass against every realizable fresh profile is amalgamable
// with every right extension at once.
// ---------------------------------------------------------------------------

// profile of an element relative to the base: diagonal bits plus both
// directions against each base element, per relation. The same encoding
// serves fresh right elements and left elements (whose bits feed the
// template), so the fresh-pair check can be memoized per profile code.
struct ProfileCodec {
    int rels = 0, a0 = 0;
    int bits_per_rel() const { return 1 + 2 * a0; }

    std::uint64_t encode(const Structure& m, const std::vector<int>& base_map, int v) const {
        std::uint64_t p = 0;
        int at = 0;
        for (int r = 0; r < rels; ++r) {
            int d[2] = {v, v};
            if (m.holds(r, std::span<const int>(d, 2))) p |= std::uint64_t(1) << at;
            ++at;
            for (int b = 0; b < a0; ++b) {
                int vb[2] = {v, base_map[static_cast<std::size_t>(b)]};
                int bv[2] = {base_map[static_cast<std::size_t>(b)], v};
                if (m.holds(r, std::span<const int>(vb, 2))) p |= std::uint64_t(1) << at;
                ++at;
                if (m.holds(r, std::span<const int>(bv, 2))) p |= std::uint64_t(1) << at;
                ++at;
            }
        }
        return p;
    }

    bool diag(std::uint64_t p, int r) const { return (p >> (r * bits_per_rel())) & 1; }
    bool v_to_base(std::uint64_t p, int r, int b) const {
        return (p >> (r * bits_per_rel() + 1 + 2 * b)) & 1;
    }
    bool base_to_v(std::uint64_t p, int r, int b) const {
        return (p >> (r * bits_per_rel() + 2 + 2 * b)) & 1;
    }
};

// realizable pair of fresh elements: two profiles plus their mutual bits
struct PairType {
    std::uint64_t p, q;
    std::uint32_t vw; // per rel: bits (v,w) and (w,v)
};

bool operator<(const PairType& a, const PairType& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q < b.q;
    return a.vw < b.vw;
}

// template bits of the cross pair (left element of code cu, fresh element of
// profile p): closure through base witnesses plus a per-relation default
// ("left first" when the variant bit is set)
struct TemplateBits {
    std::uint32_t uv = 0, vu = 0; // bit per relation
};

TemplateBits template_bits(const ProfileCodec& codec, std::uint64_t cu, std::uint64_t p, int variant) {
    TemplateBits out;
    for (int r = 0; r < codec.rels; ++r) {
        bool f_uv = false, f_vu = false;
        for (int b = 0; b < codec.a0; ++b) {
            if (codec.v_to_base(cu, r, b) && codec.base_to_v(p, r, b)) f_uv = true;
            if (codec.v_to_base(p, r, b) && codec.base_to_v(cu, r, b)) f_vu = true;
        }
        bool uv = f_uv, vu = f_vu;
        if (!f_uv && !f_vu && ((variant >> r) & 1)) uv = true;
        if (uv) out.uv |= std::uint32_t(1) << r;
        if (vu) out.vu |= std::uint32_t(1) << r;
    }
    return out;
}

// 2-element word for (left u, fresh v_p)
std::uint32_t pack2_code(const ProfileCodec& codec, std::uint64_t cu,
                         std::uint64_t p, const TemplateBits& tu) {
    return detail::pack_pattern_bits(codec.rels, 2, [&](int r, int i, int j) -> bool {
        if (i == 0 && j == 0) return codec.diag(cu, r);
        if (i == 1 && j == 1) return codec.diag(p, r);
        if (i == 0 && j == 1) return ((tu.uv >> r) & 1) != 0;
        return ((tu.vu >> r) & 1) != 0;
    });
}

// 3-element word for (left u, left w, fresh v_p); uw/wu are the packed
// mutual relation bits of the left pair
std::uint32_t pack3_llf(const ProfileCodec& codec, std::uint64_t cu,
                        std::uint64_t cw, std::uint32_t uw, std::uint32_t wu, std::uint64_t p,
                        const TemplateBits& tu, const TemplateBits& tw) {
    return detail::pack_pattern_bits(codec.rels, 3, [&](int r, int i, int j) -> bool {
        if (i == 0 && j == 0) return codec.diag(cu, r);
        if (i == 1 && j == 1) return codec.diag(cw, r);
        if (i == 2 && j == 2) return codec.diag(p, r);
        if (i == 0 && j == 1) return ((uw >> r) & 1) != 0;
        if (i == 1 && j == 0) return ((wu >> r) & 1) != 0;
        if (i == 0 && j == 2) return ((tu.uv >> r) & 1) != 0;
        if (i == 2 && j == 0) return ((tu.vu >> r) & 1) != 0;
        if (i == 1 && j == 2) return ((tw.uv >> r) & 1) != 0;
        return ((tw.vu >> r) & 1) != 0; // (2,1)
    });
}

// 3-element word for (left u, fresh v_p, fresh w_q)
std::uint32_t pack3_lff(const ProfileCodec& codec, std::uint64_t cu,
                        const PairType& pt, const TemplateBits& tp, const TemplateBits& tq) {
    return detail::pack_pattern_bits(codec.rels, 3, [&](int r, int i, int j) -> bool {
        if (i == 0 && j == 0) return codec.diag(cu, r);
        if (i == 1 && j == 1) return codec.diag(pt.p, r);
        if (i == 2 && j == 2) return codec.diag(pt.q, r);
        if (i == 0 && j == 1) return ((tp.uv >> r) & 1) != 0;
        if (i == 1 && j == 0) return ((tp.vu >> r) & 1) != 0;
        if (i == 0 && j == 2) return ((tq.uv >> r) & 1) != 0;
        if (i == 2 && j == 0) return ((tq.vu >> r) & 1) != 0;
        if (i == 1 && j == 2) return ((pt.vw >> (2 * r)) & 1) != 0;
        return ((pt.vw >> (2 * r + 1)) & 1) != 0; // (2,1)
    });
}

struct FastContext {
    const ClassSpec* spec = nullptr;
    const detail::PatternTables* tables = nullptr;
    ProfileCodec codec;
    std::vector<std::uint64_t> profiles;
    std::vector<PairType> pair_types;
    // outside-element profile code -> bitmask of variants for which the
    // fresh-pair check passes; shared by every left extension of the base
    std::map<std::uint64_t, unsigned> pt_pass;

    void collect_right_data(const ExtTable& exts) {
        std::set<std::uint64_t> pset;
        std::set<PairType> ptset;
        for (const auto& e : exts.all) {
            std::vector<char> in_base(static_cast<std::size_t>(e.model->size()), 0);
            for (int x : e.base_map) in_base[static_cast<std::size_t>(x)] = 1;
            std::vector<int> fresh;
            for (int v = 0; v < e.model->size(); ++v)
                if (!in_base[static_cast<std::size_t>(v)]) fresh.push_back(v);
            std::vector<std::uint64_t> fp;
            for (int v : fresh) fp.push_back(codec.encode(*e.model, e.base_map, v));
            for (std::size_t i = 0; i < fresh.size(); ++i) pset.insert(fp[i]);
            for (std::size_t i = 0; i < fresh.size(); ++i)
                for (std::size_t j = 0; j < fresh.size(); ++j) {
                    if (i == j) continue;
                    std::uint32_t vw = 0;
                    int at = 0;
                    for (int r = 0; r < codec.rels; ++r) {
                        int t1[2] = {fresh[i], fresh[j]};
                        int t2[2] = {fresh[j], fresh[i]};
                        if (e.model->holds(r, std::span<const int>(t1, 2))) vw |= std::uint32_t(1) << at;
                        ++at;
                        if (e.model->holds(r, std::span<const int>(t2, 2))) vw |= std::uint32_t(1) << at;
                        ++at;
                    }
                    ptset.insert(PairType{fp[i], fp[j], vw});
                }
        }
        profiles.assign(pset.begin(), pset.end());
        pair_types.assign(ptset.begin(), ptset.end());
    }

    // precompute the fresh-pair verdicts for every outside code realized by
    // the left extensions
    void build_pt_table(const ExtTable& exts) {
        const Signature& sig = spec->signature;
        std::set<std::uint64_t> codes;
        for (const auto& e : exts.reps) {
            std::vector<char> in_base(static_cast<std::size_t>(e.model->size()), 0);
            for (int x : e.base_map) in_base[static_cast<std::size_t>(x)] = 1;
            for (int u = 0; u < e.model->size(); ++u)
                if (!in_base[static_cast<std::size_t>(u)])
                    codes.insert(codec.encode(*e.model, e.base_map, u));
        }
        const int nvariants = 1 << sig.relation_count();
        for (std::uint64_t cu : codes) {
            unsigned mask = 0;
            for (int variant = 0; variant < nvariants; ++variant) {
                bool ok = true;
                for (const auto& pt : pair_types) {
                    TemplateBits tp = template_bits(codec, cu, pt.p, variant);
                    TemplateBits tq = template_bits(codec, cu, pt.q, variant);
                    if (tables->bad3[pack3_lff(codec, cu, pt, tp, tq)]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) mask |= 1u << variant;
            }
            pt_pass.emplace(cu, mask);
        }
    }
};

// per-left data for the one-shot proof
struct LeftData {
    std::vector<std::uint64_t> code;         // per element, relative to the base
    std::vector<int> base_index;             // -1 for elements off the base image
    std::vector<int> outside;                // elements off the base image
    std::vector<std::vector<std::uint32_t>> rel_bits; // mutual bits, packed per relation
};

LeftData make_left_data(const ProfileCodec& codec, const Ext& left) {
    LeftData out;
    const Structure& m = *left.model;
    const int n = m.size();
    out.base_index.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < left.base_map.size(); ++b)
        out.base_index[static_cast<std::size_t>(left.base_map[b])] = static_cast<int>(b);
    for (int u = 0; u < n; ++u) {
        out.code.push_back(codec.encode(m, left.base_map, u));
        if (out.base_index[static_cast<std::size_t>(u)] < 0) out.outside.push_back(u);
    }
    out.rel_bits.assign(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int r = 0; r < codec.rels; ++r) {
                int t[2] = {x, y};
                if (m.holds(r, std::span<const int>(t, 2)))
                    out.rel_bits[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] |=
                        std::uint32_t(1) << r;
            }
    return out;
}

// One-shot proof that a left extension amalgamates with every right
// extension via the identification-free template.
bool left_passes_one_shot(const FastContext& fc, const LeftData& left) {
    const Signature& sig = fc.spec->signature;
    const int n = static_cast<int>(left.code.size());
    std::vector<TemplateBits> tb(static_cast<std::size_t>(n));
    // all-left-first tried before the mixed and all-false defaults
    for (int variant = (1 << sig.relation_count()) - 1; variant >= 0; --variant) {
        bool ok = true;
        for (int u : left.outside) {
            auto it = fc.pt_pass.find(left.code[static_cast<std::size_t>(u)]);
            if (it == fc.pt_pass.end() || !((it->second >> variant) & 1)) { ok = false; break; }
        }
        for (std::size_t pi = 0; pi < fc.profiles.size() && ok; ++pi) {
            const std::uint64_t p = fc.profiles[pi];
            for (int x = 0; x < n; ++x) {
                const int bx = left.base_index[static_cast<std::size_t>(x)];
                if (bx >= 0) {
                    // base elements see the fresh element exactly as the
                    // profile records, not through the closure template
                    TemplateBits exact;
                    for (int r = 0; r < fc.codec.rels; ++r) {
                        if (fc.codec.base_to_v(p, r, bx)) exact.uv |= std::uint32_t(1) << r;
                        if (fc.codec.v_to_base(p, r, bx)) exact.vu |= std::uint32_t(1) << r;
                    }
                    tb[static_cast<std::size_t>(x)] = exact;
                } else {
                    tb[static_cast<std::size_t>(x)] =
                        template_bits(fc.codec, left.code[static_cast<std::size_t>(x)], p, variant);
                }
            }
            for (int u : left.outside) {
                const std::uint64_t cu = left.code[static_cast<std::size_t>(u)];
                const TemplateBits& tu = tb[static_cast<std::size_t>(u)];
                if (fc.tables->bad2[pack2_code(fc.codec, cu, p, tu)]) { ok = false; break; }
                for (int w = 0; w < n && ok; ++w) {
                    if (w == u) continue;
                    std::uint32_t word = pack3_llf(
                        fc.codec, cu, left.code[static_cast<std::size_t>(w)],
                        left.rel_bits[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)],
                        left.rel_bits[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)], p, tu,
                        tb[static_cast<std::size_t>(w)]);
                    if (fc.tables->bad3[word]) { ok = false; break; }
                }
                if (!ok) break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

Span make_span(const Structure& base, const Ext& left, const Ext& right) {
    return Span{base, *left.model, left.base_map, *right.model, right.base_map};
}

struct SpanSweepResult {
    bool failed = false;
    int left = -1, right = -1;
    long spans = 0;
};

// verify every span (base -> reps[i], base -> all[j]): one-shot proof per
// left when the fast context is available, exhaustive amalgam search
// otherwise; deterministic first-failure fold
SpanSweepResult sweep_spans(const ClassSpec& spec, const Structure& base, const ExtTable& exts,
                            const FastContext* fc, int workers) {
    // when every subset has a unique embedding the rep and full lists agree,
    // and amalgamation symmetry lets the right index start at the left one
    const bool symmetric = exts.reps.size() == exts.all.size();
    const int nreps = static_cast<int>(exts.reps.size());
    std::vector<SpanSweepResult> outs(static_cast<std::size_t>(std::max(workers, 1)));
    run_chunked(nreps, workers, [&](int chunk, int begin, int end) {
        SpanSweepResult& co = outs[static_cast<std::size_t>(chunk)];
        for (int li = begin; li < end && !co.failed; ++li) {
            const Ext& left = exts.reps[static_cast<std::size_t>(li)];
            if (left.model->size() == base.size()) {
                co.spans += static_cast<long>(exts.all.size());
                continue; // f1 is an isomorphism: A2 itself amalgamates
            }
            if (fc) {
                LeftData data = make_left_data(fc->codec, left);
                if (left_passes_one_shot(*fc, data)) {
                    co.spans += static_cast<long>(exts.all.size());
                    continue;
                }
            }
            for (int ri = symmetric ? li : 0; ri < static_cast<int>(exts.all.size()); ++ri) {
                const Ext& right = exts.all[static_cast<std::size_t>(ri)];
                ++co.spans;
                if (right.model->size() == base.size()) continue; // f2 iso
                Span span = make_span(base, left, right);
                if (!find_amalgam(spec, span).found) {
                    co.failed = true;
                    co.left = li;
                    co.right = ri;
                    break;
                }
            }
        }
    });
    SpanSweepResult folded;
    for (const auto& co : outs) {
        folded.spans += co.spans;
        if (co.failed && !folded.failed) {
            folded.failed = true;
            folded.left = co.left;
            folded.right = co.right;
        }
    }
    return folded;
}

} // namespace

HpResult check_hp(const ModelCatalog& catalog, int n) {
    HpResult result;
    result.bound = n;
    const ClassSpec& spec = catalog.spec();
    for (int size = 1; size <= n && size <= catalog.max_size(); ++size) {
        for (const auto& b : catalog.models(size)) {
            const int full = 1 << size;
            std::vector<char> good(static_cast<std::size_t>(full), 0);
            std::vector<int> subset;
            for (int mask = 0; mask < full; ++mask) {
                subset.clear();
                for (int i = 0; i < size; ++i)
                    if ((mask >> i) & 1) subset.push_back(i);
                // a witness substructure must interpret every constant
                bool has_constants = true;
                for (int c = 0; c < spec.signature.constant_count(); ++c)
                    if (!((mask >> b.constant(c)) & 1)) { has_constants = false; break; }
                if (!has_constants) continue;
                if (is_member(spec, induced_substructure(b, subset))) good[static_cast<std::size_t>(mask)] = 1;
            }
            // close downward: a subset is fine when some superset is a member
            for (int mask = full - 1; mask >= 0; --mask) {
                if (good[static_cast<std::size_t>(mask)]) continue;
                for (int i = 0; i < size && !good[static_cast<std::size_t>(mask)]; ++i)
                    if (!((mask >> i) & 1) && good[static_cast<std::size_t>(mask | (1 << i))])
                        good[static_cast<std::size_t>(mask)] = 1;
            }
            for (int mask = 0; mask < full; ++mask) {
                if (!good[static_cast<std::size_t>(mask)]) {
                    result.pass = false;
                    result.model = b;
                    result.subset.clear();
                    for (int i = 0; i < size; ++i)
                        if ((mask >> i) & 1) result.subset.push_back(i);
                    return result;
                }
            }
        }
    }
    return result;
}

namespace {

// Base structure for joint embedding: the substructure induced by the
// constants (empty when the signature has none). Returns false when the two
// skeletons disagree, which already refutes joint embeddability.
bool jep_base(const ClassSpec& spec, const Structure& a1, const Structure& a2, Span& span) {
    const Signature& sig = spec.signature;
    std::vector<int> c1, c2;
    for (int c = 0; c < sig.constant_count(); ++c) {
        c1.push_back(a1.constant(c));
        c2.push_back(a2.constant(c));
    }
    std::sort(c1.begin(), c1.end());
    c1.erase(std::unique(c1.begin(), c1.end()), c1.end());
    std::sort(c2.begin(), c2.end());
    c2.erase(std::unique(c2.begin(), c2.end()), c2.end());
    Structure base = induced_substructure(a1, c1);
    std::vector<int> m1(c1.begin(), c1.end());
    // map base elements to a2 through constant correspondence
    std::vector<int> m2(base.size(), -1);
    for (int c = 0; c < sig.constant_count(); ++c) {
        int be = base.constant(c);
        if (m2[static_cast<std::size_t>(be)] >= 0 && m2[static_cast<std::size_t>(be)] != a2.constant(c)) return false;
        m2[static_cast<std::size_t>(be)] = a2.constant(c);
    }
    for (int v : m2)
        if (v < 0) return false; // unreachable: every base element is a constant
    if (!is_embedding_map(base, a2, m2)) return false;
    span = Span{std::move(base), a1, std::move(m1), a2, std::move(m2)};
    return true;
}

} // namespace

JepResult check_jep(const ModelCatalog& catalog, int n, int workers) {
    JepResult result;
    result.bound = n;
    const ClassSpec& spec = catalog.spec();
    std::vector<const Structure*> models = catalog.all_up_to(n);
    const int nm = static_cast<int>(models.size());

    const detail::PatternTables* jep_tables = detail::pattern_tables_for(spec);
    if (jep_tables && spec.signature.constant_count() == 0) {
        // joint embedding is the empty-base span sweep over whole models
        Structure base = std::move(StructureBuilder(spec.signature, 0)).build();
        ExtTable exts;
        int size_at = 0;
        for (int i = 0; i < nm; ++i) {
            const Structure* m = models[static_cast<std::size_t>(i)];
            exts.all.push_back(Ext{m->size(), size_at++, m, {}});
        }
        exts.reps = exts.all;
        FastContext fc;
        fc.spec = &spec;
        fc.tables = jep_tables;
        fc.codec = ProfileCodec{spec.signature.relation_count(), 0};
        fc.collect_right_data(exts);
        fc.build_pt_table(exts);
        SpanSweepResult sweep = sweep_spans(spec, base, exts, &fc, workers);
        result.spans = sweep.spans;
        if (sweep.failed) {
            result.pass = false;
            result.pair = std::make_pair(*exts.reps[static_cast<std::size_t>(sweep.left)].model,
                                         *exts.all[static_cast<std::size_t>(sweep.right)].model);
        }
        return result;
    }

    struct ChunkOut {
        bool failed = false;
        int i = 0, j = 0;
        long spans = 0;
    };
    std::vector<ChunkOut> outs(static_cast<std::size_t>(std::max(workers, 1)));
    run_chunked(nm, workers, [&](int chunk, int begin, int end) {
        ChunkOut& co = outs[static_cast<std::size_t>(chunk)];
        for (int i = begin; i < end && !co.failed; ++i)
            for (int j = i; j < nm; ++j) {
                ++co.spans;
                Span span;
                if (!jep_base(spec, *models[static_cast<std::size_t>(i)], *models[static_cast<std::size_t>(j)], span)) {
                    co = {true, i, j, co.spans};
                    break;
                }
                if (!find_amalgam(spec, span).found) {
                    co = {true, i, j, co.spans};
                    break;
                }
            }
    });
    for (const auto& co : outs) {
        result.spans += co.spans;
        if (co.failed && result.pass) {
            result.pass = false;
            result.pair = {*models[static_cast<std::size_t>(co.i)], *models[static_cast<std::size_t>(co.j)]};
        }
    }
    return result;
}

ApResult check_ap(const ModelCatalog& catalog, int n, int workers) {
    ApResult result;
    result.bound = n;
    const ClassSpec& spec = catalog.spec();
    const Signature& sig = spec.signature;

    const detail::PatternTables* tables = detail::pattern_tables_for(spec);

    // a base of the full bound size only admits isomorphic sides
    for (int a0_size = 1; a0_size < n; ++a0_size) {
        for (const auto& base : catalog.models(a0_size)) {
            ExtTable exts = collect_extensions(catalog, base, n);
            FastContext fc;
            if (tables) {
                fc.spec = &spec;
                fc.tables = tables;
                fc.codec = ProfileCodec{sig.relation_count(), base.size()};
                fc.collect_right_data(exts);
                fc.build_pt_table(exts);
            }
            SpanSweepResult sweep = sweep_spans(spec, base, exts, tables ? &fc : nullptr, workers);
            result.spans += sweep.spans;
            if (sweep.failed && result.pass) {
                result.pass = false;
                const Ext& left = exts.reps[static_cast<std::size_t>(sweep.left)];
                const Ext& right = exts.all[static_cast<std::size_t>(sweep.right)];
                result.span = make_span(base, left, right);
                result.amalgam_size_bound = left.model->size() + right.model->size() - base.size();
            }
            if (!result.pass) return result;
        }
    }
    return result;
}

std::vector<QfType> type_census(const ModelCatalog& catalog, int k, int n) {
    if (k < 0) fail(Errc::InvalidArgument, "negative arity");
    std::set<QfType> seen;
    long tuples_budget = 10'000'000;
    for (int size = 1; size <= n && size <= catalog.max_size(); ++size) {
        for (const auto& m : catalog.models(size)) {
            std::vector<int> tuple(static_cast<std::size_t>(k), 0);
            long count = 1;
            for (int i = 0; i < k; ++i) {
                count *= size;
                if (count > tuples_budget) fail(Errc::ResourceLimit, "type census tuple space too large");
            }
            tuples_budget -= count;
            if (tuples_budget < 0) fail(Errc::ResourceLimit, "type census tuple space too large");
            if (k == 0) {
                seen.insert(qf_type(m, std::span<const int>(tuple.data(), 0)));
                continue;
            }
            while (true) {
                seen.insert(qf_type(m, tuple));
                int p = k - 1;
                while (p >= 0 && ++tuple[static_cast<std::size_t>(p)] == size) {
                    tuple[static_cast<std::size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
            }
        }
    }
    return std::vector<QfType>(seen.begin(), seen.end());
}

bool ap_certificate_replays(const ClassSpec& spec, const Span& span) {
    return !find_amalgam(spec, span).found;
}

bool jep_certificate_replays(const ClassSpec& spec, const Structure& a1, const Structure& a2) {
    Span span;
    if (!jep_base(spec, a1, a2, span)) return true; // mismatched skeletons: refuted
    return !find_amalgam(spec, span).found;
}

} // namespace rwb
