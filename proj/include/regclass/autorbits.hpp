#pragma once

#include <cstdint>
#include <vector>

#include "regclass/permgroup.hpp"

namespace regclass {

// Partition of class indices into orbits under a group of outer conjugations.
struct OrbitPartition {
    std::vector<std::size_t> orbit_of;               // per class index
    std::vector<std::vector<std::size_t>> orbits;    // ordered by least member
    std::size_t count() const { return orbits.size(); }
};

// Orbits of the equivalence generated by class(x) ~ class(c^-1 x c). Throws
// NotNormalError when a conjugator does not normalize the group.
OrbitPartition fuse_classes(const ClassTable& T, const std::vector<Perm>& conjugators);

struct OrbitCounts {
    std::size_t n_pregular = 0;
    std::size_t n_pelement = 0;  // orbits of nontrivial p-element classes
    std::size_t n_union = 0;
};

OrbitCounts orbit_counts(const OrbitPartition& part, const ClassTable& T, std::uint64_t p);

}  // namespace regclass
