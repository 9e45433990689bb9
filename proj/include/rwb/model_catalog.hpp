#pragma once

#include <vector>

#include "rwb/canonical.hpp"
#include "rwb/class_spec.hpp"

namespace rwb {

struct CatalogLimits {
    long max_models = 500000; // total across sizes; ResourceLimit beyond
};

// Complete, isomorphism-irredundant listing of the class members of each
// size 1..max_size. Models are stored in canonical labeling, sorted by
// canonical code within a size, so every downstream enumeration order is
// deterministic and scheduling-independent.
class ModelCatalog {
public:
    ModelCatalog(ClassSpec spec, int max_size, std::vector<std::vector<Structure>> by_size)
        : spec_(std::move(spec)), max_size_(max_size), by_size_(std::move(by_size)) {}

    const ClassSpec& spec() const { return spec_; }
    int max_size() const { return max_size_; }

    const std::vector<Structure>& models(int size) const { return by_size_[static_cast<std::size_t>(size)]; }

    std::vector<const Structure*> all_up_to(int n) const;
    long total() const;

private:
    ClassSpec spec_;
    int max_size_;
    std::vector<std::vector<Structure>> by_size_; // index = size, 0 unused
};

// Canonical-augmentation enumeration: extend each size-k model by one
// element, searching only the free relations (derived relations are filled
// by the checker's completion), prune with anchored forbidden checks, and
// keep one representative per canonical code.
ModelCatalog enumerate_models(const ClassSpec& spec, int max_size, int workers = 1,
                              CatalogLimits limits = {});

} // namespace rwb
