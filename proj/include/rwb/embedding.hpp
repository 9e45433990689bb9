#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rwb/structure.hpp"

namespace rwb {

// An induced-substructure embedding: injective, preserves and reflects every
// relation, and maps constants to constants. Validated on construction.
class Embedding {
public:
    Embedding(Structure source, Structure target, std::vector<int> map);

    const Structure& source() const { return source_; }
    const Structure& target() const { return target_; }
    std::span<const int> map() const { return map_; }
    int operator()(int element) const { return map_[static_cast<std::size_t>(element)]; }

    bool is_identity() const;

    friend bool operator==(const Embedding& a, const Embedding& b) {
        return a.map_ == b.map_ && a.source_ == b.source_ && a.target_ == b.target_;
    }

private:
    Structure source_;
    Structure target_;
    std::vector<int> map_;
};

// g after f, for f : A -> B and g : B -> C.
Embedding compose(const Embedding& f, const Embedding& g);

bool is_embedding_map(const Structure& a, const Structure& c, std::span<const int> map);

// All embeddings A -> C in lexicographic order of the image sequence
// (map[0], map[1], ...). Deterministic. SignatureMismatch when the
// signatures differ.
std::vector<Embedding> enumerate_embeddings(const Structure& a, const Structure& c);

// Same enumeration without materializing Embedding objects.
std::vector<std::vector<int>> embedding_maps(const Structure& a, const Structure& c);

// True iff at least one embedding exists (early exit).
bool embeds(const Structure& a, const Structure& c);

// Embeddings extending a partial map (-1 marks unassigned source elements).
// first_only stops at the lexicographically first completion.
std::vector<std::vector<int>> embedding_maps_extending(const Structure& a, const Structure& c,
                                                       std::span<const int> partial, bool first_only);

// The automorphism group as a list, identity first (it is the lex-least).
std::vector<Embedding> automorphisms(const Structure& s);

// Lex-least non-identity automorphism of order 2, if any.
std::optional<Embedding> find_involution(const Structure& s);

} // namespace rwb
