#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rwb {

struct RelationSymbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

// A finite relational signature: named relation symbols with positive arity
// plus a list of constant names. Names must be distinct and nonempty.
class Signature {
public:
    Signature() = default;
    Signature(std::vector<RelationSymbol> relations, std::vector<std::string> constants = {});

    const std::vector<RelationSymbol>& relations() const { return relations_; }
    const std::vector<std::string>& constants() const { return constants_; }

    int relation_count() const { return static_cast<int>(relations_.size()); }
    int constant_count() const { return static_cast<int>(constants_.size()); }

    int arity(int rel) const { return relations_[static_cast<std::size_t>(rel)].arity; }
    const std::string& relation_name(int rel) const { return relations_[static_cast<std::size_t>(rel)].name; }

    // -1 when the name is not a relation of this signature.
    int relation_index(std::string_view name) const;
    int constant_index(std::string_view name) const;

    int max_arity() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<RelationSymbol> relations_;
    std::vector<std::string> constants_;
};

Signature order_signature();        // {"<": 2}
Signature graph_signature();        // {"E": 2}
Signature ordered_graph_signature();// {"<": 2, "E": 2}

} // namespace rwb
