#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rwb/embedding.hpp"

namespace rwb {

// A total coloring of the r-tuples of a host structure: explicit entries
// over a default color. Stands in for the ambient type of a tuple when
// extracting indiscernible sub-pictures.
class Palette {
public:
    Palette(int arity, int default_color) : arity_(arity), default_(default_color) {}

    int arity() const { return arity_; }
    int default_color() const { return default_; }

    void set(std::vector<int> tuple, int color);
    int color(std::span<const int> tuple) const;

    const std::map<std::vector<int>, int>& entries() const { return map_; }

private:
    int arity_;
    int default_;
    std::map<std::vector<int>, int> map_;
};

// An embedding g : A -> C such that tuples of equal atomic type in A receive
// equal palette colors on their images; the quantification runs over all
// r-tuples with repetitions, which subsumes every arity up to r. Returns the
// lexicographically first such embedding, or nullopt when exhaustive search
// over hom(A,C) finds none.
//
// The iterated variant filters one atomic type at a time (the scaling
// strategy); both produce the identical result.
std::optional<Embedding> extract_indiscernible(const Structure& c, const Structure& a,
                                               const Palette& palette, bool iterated = false);

} // namespace rwb
