#include "rwb/signature.hpp"

#include <algorithm>
#include <unordered_set>

#include "rwb/errors.hpp"

namespace rwb {

Signature::Signature(std::vector<RelationSymbol> relations, std::vector<std::string> constants)
    : relations_(std::move(relations)), constants_(std::move(constants)) {
    std::unordered_set<std::string> seen;
    for (const auto& r : relations_) {
        if (r.name.empty()) fail(Errc::InvalidArgument, "empty relation name");
        if (r.arity < 1) fail(Errc::InvalidArgument, "relation " + r.name + " has arity < 1");
        if (!seen.insert(r.name).second) fail(Errc::InvalidArgument, "duplicate symbol " + r.name);
    }
    for (const auto& c : constants_) {
        if (c.empty()) fail(Errc::InvalidArgument, "empty constant name");
        if (!seen.insert(c).second) fail(Errc::InvalidArgument, "duplicate symbol " + c);
    }
}

int Signature::relation_index(std::string_view name) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Signature::constant_index(std::string_view name) const {
    for (std::size_t i = 0; i < constants_.size(); ++i)
        if (constants_[i] == name) return static_cast<int>(i);
    return -1;
}

int Signature::max_arity() const {
    int m = 0;
    for (const auto& r : relations_) m = std::max(m, r.arity);
    return m;
}

Signature order_signature() { return Signature({{"<", 2}}); }

Signature graph_signature() { return Signature({{"E", 2}}); }

Signature ordered_graph_signature() { return Signature({{"<", 2}, {"E", 2}}); }

} // namespace rwb
