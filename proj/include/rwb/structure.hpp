#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "rwb/bitset.hpp"
#include "rwb/signature.hpp"

namespace rwb {

// A finite relational structure with universe 0..n-1. Relation tables are
// bitsets indexed by mixed-radix tuple encoding, so membership is O(1)
// during backtracking. Instances are immutable after construction and cheap
// to copy (shared payload), hence safe to share across threads.
class Structure {
public:
    Structure();

    int size() const { return data_->n; }
    const Signature& signature() const { return data_->sig; }

    bool holds(int rel, std::span<const int> tuple) const {
        return data_->tables[static_cast<std::size_t>(rel)].test(tuple_index(tuple));
    }
    bool holds(std::string_view rel, std::initializer_list<int> tuple) const;

    const Bitset& table(int rel) const { return data_->tables[static_cast<std::size_t>(rel)]; }

    // constant index (per signature order) -> universe element
    int constant(int c) const { return data_->constants[static_cast<std::size_t>(c)]; }
    const std::vector<int>& constant_map() const { return data_->constants; }

    // Sorted list of tuples of one relation, decoded from the table.
    std::vector<std::vector<int>> tuples(int rel) const;

    std::size_t tuple_index(std::span<const int> tuple) const {
        std::size_t ix = 0;
        for (int v : tuple) ix = ix * static_cast<std::size_t>(data_->n) + static_cast<std::size_t>(v);
        return ix;
    }

    // Labeled equality: same signature, size, tables and constant map.
    friend bool operator==(const Structure& a, const Structure& b);

private:
    struct Data {
        Signature sig;
        int n = 0;
        std::vector<Bitset> tables;
        std::vector<int> constants;
    };

    explicit Structure(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

    std::shared_ptr<const Data> data_;

    friend class StructureBuilder;
};

// Mutable staging area for building structures. Tuples are validated to be
// in range; build() checks every constant is interpreted.
class StructureBuilder {
public:
    StructureBuilder(Signature sig, int n);
    explicit StructureBuilder(const Structure& s);

    int size() const { return n_; }
    const Signature& signature() const { return sig_; }

    void set(int rel, std::span<const int> tuple, bool value = true);
    void add(int rel, std::initializer_list<int> tuple) { set(rel, std::span<const int>(tuple.begin(), tuple.size())); }
    void add(std::string_view rel, std::initializer_list<int> tuple);
    bool holds(int rel, std::span<const int> tuple) const;

    void set_constant(int c, int element);
    void set_constant(std::string_view name, int element);
    int constant(int c) const { return constants_[static_cast<std::size_t>(c)]; }

    Structure build() &&;

private:
    Signature sig_;
    int n_;
    std::vector<Bitset> tables_;
    std::vector<int> constants_;

    std::size_t index_checked(int rel, std::span<const int> tuple) const;
};

// Restriction to a subset of the universe, relabeled 0..|subset|-1 in
// increasing order of the original indices. The subset must contain every
// constant interpretation (MissingConstant otherwise).
Structure induced_substructure(const Structure& s, std::span<const int> subset);

// Relabel: element i becomes perm[i]. perm must be a permutation of 0..n-1.
Structure apply_permutation(const Structure& s, std::span<const int> perm);

// Common small structures used throughout tests and the CLI.
Structure chain(int n);           // strict linear order over order_signature()
Structure complete_graph(int n);  // K_n over graph_signature()
Structure empty_graph(int n);

} // namespace rwb
