#include "rwb/structure.hpp"

#include <algorithm>

#include "rwb/errors.hpp"

namespace rwb {

namespace {

std::size_t table_capacity(int n, int arity) {
    std::size_t cap = 1;
    for (int i = 0; i < arity; ++i) cap *= static_cast<std::size_t>(n);
    return cap;
}

} // namespace

Structure::Structure() : data_(std::make_shared<Data>()) {}

bool Structure::holds(std::string_view rel, std::initializer_list<int> tuple) const {
    int r = signature().relation_index(rel);
    if (r < 0) fail(Errc::SignatureMismatch, "no relation named " + std::string(rel));
    return holds(r, std::span<const int>(tuple.begin(), tuple.size()));
}

std::vector<std::vector<int>> Structure::tuples(int rel) const {
    const int arity = signature().arity(rel);
    const Bitset& t = table(rel);
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(static_cast<std::size_t>(arity));
    for (std::size_t ix = 0; ix < t.size(); ++ix) {
        if (!t.test(ix)) continue;
        std::size_t rest = ix;
        for (int p = arity - 1; p >= 0; --p) {
            tuple[static_cast<std::size_t>(p)] = static_cast<int>(rest % static_cast<std::size_t>(size()));
            rest /= static_cast<std::size_t>(size());
        }
        out.push_back(tuple);
    }
    return out;
}

bool operator==(const Structure& a, const Structure& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->sig == b.data_->sig && a.data_->n == b.data_->n &&
           a.data_->tables == b.data_->tables && a.data_->constants == b.data_->constants;
}

StructureBuilder::StructureBuilder(Signature sig, int n) : sig_(std::move(sig)), n_(n) {
    if (n < 0) fail(Errc::InvalidArgument, "negative universe size");
    tables_.reserve(static_cast<std::size_t>(sig_.relation_count()));
    for (int r = 0; r < sig_.relation_count(); ++r)
        tables_.emplace_back(table_capacity(n_, sig_.arity(r)));
    constants_.assign(static_cast<std::size_t>(sig_.constant_count()), -1);
}

StructureBuilder::StructureBuilder(const Structure& s)
    : sig_(s.signature()), n_(s.size()), constants_(s.constant_map()) {
    tables_.reserve(static_cast<std::size_t>(sig_.relation_count()));
    for (int r = 0; r < sig_.relation_count(); ++r) tables_.push_back(s.table(r));
}

std::size_t StructureBuilder::index_checked(int rel, std::span<const int> tuple) const {
    if (rel < 0 || rel >= sig_.relation_count()) fail(Errc::OutOfRange, "relation index");
    if (static_cast<int>(tuple.size()) != sig_.arity(rel))
        fail(Errc::InvalidArgument, "tuple arity mismatch for " + sig_.relation_name(rel));
    std::size_t ix = 0;
    for (int v : tuple) {
        if (v < 0 || v >= n_) fail(Errc::OutOfRange, "tuple entry outside universe");
        ix = ix * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    return ix;
}

void StructureBuilder::set(int rel, std::span<const int> tuple, bool value) {
    tables_[static_cast<std::size_t>(rel)].set(index_checked(rel, tuple), value);
}

void StructureBuilder::add(std::string_view rel, std::initializer_list<int> tuple) {
    int r = sig_.relation_index(rel);
    if (r < 0) fail(Errc::SignatureMismatch, "no relation named " + std::string(rel));
    set(r, std::span<const int>(tuple.begin(), tuple.size()));
}

bool StructureBuilder::holds(int rel, std::span<const int> tuple) const {
    return tables_[static_cast<std::size_t>(rel)].test(index_checked(rel, tuple));
}

void StructureBuilder::set_constant(int c, int element) {
    if (c < 0 || c >= sig_.constant_count()) fail(Errc::OutOfRange, "constant index");
    if (element < 0 || element >= n_) fail(Errc::OutOfRange, "constant interpretation outside universe");
    constants_[static_cast<std::size_t>(c)] = element;
}

void StructureBuilder::set_constant(std::string_view name, int element) {
    int c = sig_.constant_index(name);
    if (c < 0) fail(Errc::SignatureMismatch, "no constant named " + std::string(name));
    set_constant(c, element);
}

Structure StructureBuilder::build() && {
    for (int c = 0; c < sig_.constant_count(); ++c)
        if (constants_[static_cast<std::size_t>(c)] < 0)
            fail(Errc::MissingConstant, sig_.constants()[static_cast<std::size_t>(c)] + " not interpreted");
    auto data = std::make_shared<Structure::Data>();
    data->sig = std::move(sig_);
    data->n = n_;
    data->tables = std::move(tables_);
    data->constants = std::move(constants_);
    return Structure(std::move(data));
}

Structure induced_substructure(const Structure& s, std::span<const int> subset) {
    std::vector<int> elems(subset.begin(), subset.end());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int e : elems)
        if (e < 0 || e >= s.size()) fail(Errc::OutOfRange, "subset element outside universe");

    std::vector<int> to_new(static_cast<std::size_t>(s.size()), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) to_new[static_cast<std::size_t>(elems[i])] = static_cast<int>(i);

    const Signature& sig = s.signature();
    for (int c = 0; c < sig.constant_count(); ++c)
        if (to_new[static_cast<std::size_t>(s.constant(c))] < 0)
            fail(Errc::MissingConstant, sig.constants()[static_cast<std::size_t>(c)] + " outside subset");

    StructureBuilder b(sig, static_cast<int>(elems.size()));
    std::vector<int> mapped;
    for (int r = 0; r < sig.relation_count(); ++r) {
        const int arity = sig.arity(r);
        // walk all tuples over the subset
        std::vector<int> pos(static_cast<std::size_t>(arity), 0);
        std::vector<int> orig(static_cast<std::size_t>(arity));
        const int m = static_cast<int>(elems.size());
        if (m == 0) continue;
        bool done = false;
        while (!done) {
            for (int p = 0; p < arity; ++p) orig[static_cast<std::size_t>(p)] = elems[static_cast<std::size_t>(pos[static_cast<std::size_t>(p)])];
            if (s.holds(r, orig)) {
                mapped.assign(pos.begin(), pos.end());
                b.set(r, mapped);
            }
            int p = arity - 1;
            while (p >= 0 && ++pos[static_cast<std::size_t>(p)] == m) {
                pos[static_cast<std::size_t>(p)] = 0;
                --p;
            }
            done = p < 0;
        }
    }
    for (int c = 0; c < sig.constant_count(); ++c)
        b.set_constant(c, to_new[static_cast<std::size_t>(s.constant(c))]);
    return std::move(b).build();
}

Structure apply_permutation(const Structure& s, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != s.size()) fail(Errc::InvalidArgument, "permutation size mismatch");
    const Signature& sig = s.signature();
    StructureBuilder b(sig, s.size());
    std::vector<int> image;
    for (int r = 0; r < sig.relation_count(); ++r) {
        const int arity = sig.arity(r);
        for (const auto& t : s.tuples(r)) {
            image.resize(static_cast<std::size_t>(arity));
            for (int p = 0; p < arity; ++p) image[static_cast<std::size_t>(p)] = perm[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])];
            b.set(r, image);
        }
    }
    for (int c = 0; c < sig.constant_count(); ++c) b.set_constant(c, perm[static_cast<std::size_t>(s.constant(c))]);
    return std::move(b).build();
}

Structure chain(int n) {
    StructureBuilder b(order_signature(), n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add(0, {i, j});
    return std::move(b).build();
}

Structure complete_graph(int n) {
    StructureBuilder b(graph_signature(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b.add(0, {i, j});
    return std::move(b).build();
}

Structure empty_graph(int n) {
    StructureBuilder b(graph_signature(), n);
    return std::move(b).build();
}

} // namespace rwb
