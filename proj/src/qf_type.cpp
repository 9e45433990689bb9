#include "rwb/qf_type.hpp"

#include <algorithm>

#include "rwb/errors.hpp"

namespace rwb {

namespace {

std::size_t pow_sz(int base, int exp) {
    std::size_t v = 1;
    for (int i = 0; i < exp; ++i) v *= static_cast<std::size_t>(base);
    return v;
}

// Enumerate all position-tuples of the given arity over 0..k-1 in mixed
// radix order, invoking fn(tuple, index).
template <typename F>
void for_each_tuple(int k, int arity, F&& fn) {
    if (k == 0) return;
    std::vector<int> t(static_cast<std::size_t>(arity), 0);
    std::size_t ix = 0;
    while (true) {
        fn(t, ix);
        ++ix;
        int p = arity - 1;
        while (p >= 0 && ++t[static_cast<std::size_t>(p)] == k) {
            t[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) break;
    }
}

} // namespace

QfType::QfType(Signature sig, int arity, std::vector<int> eq_classes, std::vector<Bitset> patterns)
    : sig_(std::move(sig)), k_(arity), eq_(std::move(eq_classes)), pat_(std::move(patterns)) {
    if (static_cast<int>(eq_.size()) != k_) fail(Errc::InvalidArgument, "equality pattern size mismatch");
    int next = 0;
    for (int c : eq_) {
        if (c > next || c < 0) fail(Errc::InvalidArgument, "equality pattern not normalized");
        if (c == next) ++next;
    }
    if (static_cast<int>(pat_.size()) != sig_.relation_count())
        fail(Errc::InvalidArgument, "pattern count mismatch");
    for (int r = 0; r < sig_.relation_count(); ++r) {
        if (pat_[static_cast<std::size_t>(r)].size() != pow_sz(k_, sig_.arity(r)))
            fail(Errc::InvalidArgument, "pattern table size mismatch");
        // Consistency: substituting equal positions must not change membership.
        const int arity_r = sig_.arity(r);
        bool ok = true;
        std::vector<int> sub(static_cast<std::size_t>(arity_r));
        for_each_tuple(k_, arity_r, [&](const std::vector<int>& t, std::size_t ix) {
            if (!ok) return;
            // canonical substitute: replace each position by the least
            // position in its equality class
            for (int p = 0; p < arity_r; ++p) {
                int pos = t[static_cast<std::size_t>(p)];
                int cls = eq_[static_cast<std::size_t>(pos)];
                int least = pos;
                for (int q = 0; q < k_; ++q)
                    if (eq_[static_cast<std::size_t>(q)] == cls) { least = q; break; }
                sub[static_cast<std::size_t>(p)] = least;
            }
            std::size_t jx = 0;
            for (int v : sub) jx = jx * static_cast<std::size_t>(k_) + static_cast<std::size_t>(v);
            if (pat_[static_cast<std::size_t>(r)].test(ix) != pat_[static_cast<std::size_t>(r)].test(jx)) ok = false;
        });
        if (!ok)
            fail(Errc::InvalidArgument,
                 "relation pattern inconsistent with equality pattern for " + sig_.relation_name(r));
    }
}

bool QfType::pattern_holds(int rel, std::span<const int> positions) const {
    std::size_t ix = 0;
    for (int v : positions) ix = ix * static_cast<std::size_t>(k_) + static_cast<std::size_t>(v);
    return pat_[static_cast<std::size_t>(rel)].test(ix);
}

std::vector<std::vector<int>> QfType::pattern_tuples(int rel) const {
    std::vector<std::vector<int>> out;
    for_each_tuple(k_, sig_.arity(rel), [&](const std::vector<int>& t, std::size_t ix) {
        if (pat_[static_cast<std::size_t>(rel)].test(ix)) out.push_back(t);
    });
    return out;
}

bool QfType::irreflexive() const {
    for (int p = 0; p < k_; ++p)
        if (eq_[static_cast<std::size_t>(p)] != p) return false;
    return true;
}

QfType qf_type(const Structure& s, std::span<const int> tuple) {
    const int k = static_cast<int>(tuple.size());
    for (int v : tuple)
        if (v < 0 || v >= s.size()) fail(Errc::OutOfRange, "tuple entry outside universe");

    std::vector<int> eq(static_cast<std::size_t>(k));
    std::vector<int> first_of;
    for (int p = 0; p < k; ++p) {
        int cls = -1;
        for (std::size_t c = 0; c < first_of.size(); ++c)
            if (tuple[static_cast<std::size_t>(first_of[c])] == tuple[static_cast<std::size_t>(p)]) {
                cls = static_cast<int>(c);
                break;
            }
        if (cls < 0) {
            cls = static_cast<int>(first_of.size());
            first_of.push_back(p);
        }
        eq[static_cast<std::size_t>(p)] = cls;
    }

    const Signature& sig = s.signature();
    std::vector<Bitset> pat;
    pat.reserve(static_cast<std::size_t>(sig.relation_count()));
    std::vector<int> elems;
    for (int r = 0; r < sig.relation_count(); ++r) {
        const int arity = sig.arity(r);
        Bitset bits(pow_sz(k, arity));
        if (k > 0) {
            std::vector<int> pos(static_cast<std::size_t>(arity), 0);
            std::size_t ix = 0;
            while (true) {
                elems.resize(static_cast<std::size_t>(arity));
                for (int p = 0; p < arity; ++p)
                    elems[static_cast<std::size_t>(p)] = tuple[static_cast<std::size_t>(pos[static_cast<std::size_t>(p)])];
                if (s.holds(r, elems)) bits.set(ix);
                ++ix;
                int p = arity - 1;
                while (p >= 0 && ++pos[static_cast<std::size_t>(p)] == k) {
                    pos[static_cast<std::size_t>(p)] = 0;
                    --p;
                }
                if (p < 0) break;
            }
        }
        pat.push_back(std::move(bits));
    }
    return QfType(sig, k, std::move(eq), std::move(pat));
}

QfType qf_type(const Structure& s, std::initializer_list<int> tuple) {
    return qf_type(s, std::span<const int>(tuple.begin(), tuple.size()));
}

} // namespace rwb
