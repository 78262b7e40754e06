#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regclass/numtheory.hpp"
#include "regclass/perm.hpp"

namespace regclass {

// Raised when an enumeration would exceed the configured element cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotNormalError : public std::invalid_argument {
public:
    NotNormalError(const std::string& what, Perm witness)
        : std::invalid_argument(what), witness_(std::move(witness)) {}
    const Perm& witness() const { return witness_; }

private:
    Perm witness_;
};

// Stabilizer chain with explicit transversals. Base points are chosen as the
// smallest point moved by the generator that first needs one.
class StabChain {
public:
    StabChain(std::size_t degree, const std::vector<Perm>& gens);

    std::size_t degree() const { return degree_; }
    std::size_t length() const { return levels_.size(); }
    Point base_point(std::size_t i) const { return levels_[i].base; }
    std::size_t orbit_size(std::size_t i) const { return levels_[i].orbit.size(); }
    // Index of pt in the level-i orbit, or -1.
    std::int32_t orbit_index(std::size_t i, Point pt) const { return levels_[i].where[pt]; }
    const Perm& transversal(std::size_t i, std::size_t t) const { return levels_[i].u[t]; }
    const Perm& inverse_transversal(std::size_t i, std::size_t t) const { return levels_[i].uinv[t]; }
    const std::vector<Perm>& strong_generators(std::size_t i) const { return levels_[i].gens; }

    BigInt order() const;
    bool contains(const Perm& g) const;
    // Residue of sifting g from level `from`, and the level where sifting stopped
    // (length() when all levels were passed).
    std::pair<Perm, std::size_t> strip(const Perm& g, std::size_t from = 0) const;

    // Bijection between G and [0, |G|): rank = sum_i t_i * prod_{j<i} |orbit_j| where
    // g = u_{L-1,t_{L-1}} * ... * u_{0,t_0}. rank() assumes g is in G.
    std::uint64_t rank(const Perm& g) const;
    Perm unrank(std::uint64_t r) const;
    // Rank of the element whose base images are imgs[0..L); imgs is overwritten.
    // Returns UINT64_MAX if the images do not belong to a group element.
    std::uint64_t rank_from_base_images(Point* imgs) const;

private:
    struct Level {
        Point base = 0;
        std::vector<Perm> gens;
        std::vector<Point> orbit;
        std::vector<std::int32_t> where;
        std::vector<Perm> u, uinv;
    };
    void compute_orbit(Level& lv) const;
    void schreier_sims(const std::vector<Perm>& gens);

    std::size_t degree_;
    std::vector<Level> levels_;
};

class PermGroup {
public:
    PermGroup(std::size_t degree, std::vector<Perm> gens);

    std::size_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    BigInt order() const { return chain_->order(); }
    std::uint64_t order_u64() const;
    const StabChain& chain() const { return *chain_; }
    bool contains(const Perm& g) const { return chain_->contains(g); }
    Perm identity() const { return identity_perm(degree_); }

private:
    std::size_t degree_;
    std::vector<Perm> gens_;
    std::shared_ptr<const StabChain> chain_;
};

std::uint64_t group_order(const PermGroup& G);

// Independent element enumeration by breadth-first search on the Cayley graph;
// intended for small groups and cross-checks. Throws ResourceError above limit.
std::vector<Perm> enumerate_elements_bfs(const PermGroup& G, std::uint64_t limit);

struct EnumOptions {
    std::uint64_t cap = 3'000'000;
    static constexpr std::uint64_t kDefaultCap = 3'000'000;
    static constexpr std::uint64_t kExtendedCap = 20'000'000;
    static EnumOptions extended() { return {kExtendedCap}; }
};

struct ConjugacyClass {
    Perm rep;  // lexicographically least image tuple in the class
    std::uint64_t size;
    std::uint64_t order;
};

class ClassTable {
public:
    ClassTable(PermGroup group, std::vector<ConjugacyClass> classes, std::vector<std::uint32_t> index);

    const PermGroup& group() const { return group_; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
    std::size_t size() const { return classes_.size(); }
    std::uint64_t exponent() const { return exponent_; }
    std::uint64_t group_order() const { return group_order_; }
    bool has_dense_index() const { return !index_.empty(); }
    // Class id of the element with the given rank (dense index only).
    std::uint32_t class_of_rank(std::uint64_t r) const { return index_[r]; }

    // Class containing g (g must lie in the group). Uses the dense index when
    // present, otherwise a conjugation-closure search for the least element.
    std::size_t class_of(const Perm& g) const;
    // Entry t is the class of rep^t, for t in [0, order of class c).
    const std::vector<std::uint32_t>& power_table(std::size_t c) const;

private:
    PermGroup group_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::uint32_t> index_;
    std::uint64_t exponent_ = 1;
    std::uint64_t group_order_ = 1;
    mutable std::vector<std::vector<std::uint32_t>> power_tables_;
};

ClassTable conjugacy_classes(const PermGroup& G, const EnumOptions& opts = {});

// Least element (as image tuple) of the conjugacy class of g, and the class size.
std::pair<Perm, std::uint64_t> class_closure_min(const PermGroup& G, const Perm& g);

struct PPartSplit {
    Perm p_part;
    Perm p_prime_part;
};
PPartSplit p_part_split(const Perm& g, std::uint64_t p);

struct ClassCounts {
    std::uint64_t p = 0;
    std::size_t k = 0;
    std::size_t k_p = 0;
    std::size_t k_p_prime = 0;
};
ClassCounts class_counts(const ClassTable& T, std::uint64_t p);

std::vector<std::size_t> power_class_map(const ClassTable& T, std::int64_t k);
std::size_t galois_fixed_class_count(const ClassTable& T, std::uint64_t p);

// Faithful action of G/N on the right cosets of N.
PermGroup quotient_group(const PermGroup& G, const std::vector<Perm>& normal_gens,
                         const EnumOptions& opts = {});

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& gens);
PermGroup derived_subgroup(const PermGroup& G);
bool is_solvable(const PermGroup& G);

// Line-oriented cache of a ClassTable.
inline constexpr const char* kClassCacheVersion = "regclass-classes/1";
void write_class_cache(const ClassTable& T, std::ostream& out);
// Verifies on load: group order, sum of sizes, canonical order, and 10 random
// elements whose classes are recomputed by closure. Throws on mismatch.
ClassTable read_class_cache(std::istream& in, std::uint64_t seed = 20240601);

}  // namespace regclass
