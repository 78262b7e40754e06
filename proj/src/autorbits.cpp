#include "regclass/autorbits.hpp"

#include <numeric>

namespace regclass {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

OrbitPartition fuse_classes(const ClassTable& T, const std::vector<Perm>& conjugators) {
    const PermGroup& G = T.group();
    for (const auto& c : conjugators) {
        if (c.size() != G.degree() || !is_permutation(c))
            throw std::invalid_argument("fuse_classes: conjugator is not a permutation of the right degree");
        for (const auto& g : G.generators()) {
            Perm y = conjugate(g, c);
            if (!G.contains(y)) throw NotNormalError("fuse_classes: conjugator does not normalize the group", y);
        }
    }
    std::vector<std::size_t> parent(T.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& c : conjugators) {
        for (std::size_t i = 0; i < T.size(); ++i) {
            const std::size_t j = T.class_of(conjugate(T[i].rep, c));
            std::size_t a = find_root(parent, i), b = find_root(parent, j);
            if (a == b) continue;
            // smaller index becomes the root, so roots are least members
            if (b < a) std::swap(a, b);
            parent[b] = a;
        }
    }
    OrbitPartition out;
    out.orbit_of.assign(T.size(), 0);
    std::vector<std::size_t> orbit_index(T.size(), SIZE_MAX);
    for (std::size_t i = 0; i < T.size(); ++i) {
        const std::size_t r = find_root(parent, i);
        if (orbit_index[r] == SIZE_MAX) {
            orbit_index[r] = out.orbits.size();
            out.orbits.emplace_back();
        }
        out.orbit_of[i] = orbit_index[r];
        out.orbits[orbit_index[r]].push_back(i);
    }
    return out;
}

OrbitCounts orbit_counts(const OrbitPartition& part, const ClassTable& T, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("orbit_counts: p must be prime");
    OrbitCounts out;
    for (const auto& orb : part.orbits) {
        // all classes in an orbit share the element order
        const std::uint64_t o = T[orb.front()].order;
        if (o % p != 0) ++out.n_pregular;
        else if (p_part(o, p) == o) ++out.n_pelement;
    }
    out.n_union = out.n_pregular + out.n_pelement;
    return out;
}

}  // namespace regclass
