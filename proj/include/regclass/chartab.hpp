#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "regclass/numtheory.hpp"
#include "regclass/permgroup.hpp"

namespace regclass {

// Sum of e-th roots of unity: value = sum over terms of mult * zeta_e^index.
// Stored sparsely (indices strictly increasing, multiplicities positive); as a
// character value it is the eigenvalue multiset of a representing matrix.
struct CycValue {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;

    bool operator==(const CycValue&) const = default;
    auto operator<=>(const CycValue&) const = default;
    std::uint64_t multiplicity_sum() const;
};

// sigma_k: zeta -> zeta^k, i.e. index j -> k*j mod e.
CycValue galois_image(const CycValue& v, std::uint64_t k, std::uint64_t e);
CycValue complex_conjugate(const CycValue& v, std::uint64_t e);
std::string to_string(const CycValue& v, std::uint64_t e);

inline constexpr std::size_t kMaxCharTableClasses = 80;
inline constexpr std::uint64_t kMaxCharTableOrder = 3'000'000;

bool chartab_feasible(std::size_t class_count, std::uint64_t order);

// a(i,j,l) = #{(x,y) : x in C_i, y in C_j, xy = rep_l}. Needs a dense class index.
class ClassAlgebra {
public:
    explicit ClassAlgebra(const ClassTable& T);
    std::size_t size() const { return k_; }
    std::uint64_t at(std::size_t i, std::size_t j, std::size_t l) const { return a_[(i * k_ + j) * k_ + l]; }

private:
    std::size_t k_;
    std::vector<std::uint64_t> a_;
};

struct CharacterTable {
    std::uint64_t group_order = 0;
    std::uint64_t exponent = 1;
    std::uint64_t modulus = 0;  // prime P = 1 mod exponent used for the splitting
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::uint64_t> class_orders;
    std::vector<std::uint64_t> degrees;
    std::vector<std::vector<CycValue>> rows;  // rows[chi][class]

    std::size_t size() const { return rows.size(); }
};

// Burnside-Dixon over GF(P), lifted to eigenvalue multisets; verified exactly
// (verify_character_table) before returning. Throws ResourceError when the group
// is outside the feasible range.
CharacterTable character_table(const ClassTable& T);

// Exact checks: degrees, per-class Galois consistency with the power maps, row
// set closure, and both orthogonality relations. Throws std::logic_error.
void verify_character_table(const CharacterTable& X, const ClassTable& T);

struct RationalityFlags {
    bool rational = false;
    bool p_rational = false;
    bool p_prime_rational = false;
    bool qp_valued = false;
};

std::vector<RationalityFlags> classify_rationality(const CharacterTable& X, const ClassTable& T, std::uint64_t p);

struct CharacterCounts {
    std::uint64_t p = 0;
    std::size_t p_rational = 0;
    std::size_t p_prime_rational = 0;
    std::size_t union_count = 0;
    std::size_t rational = 0;
    std::size_t p_rational_or_qp = 0;  // |Irr_p-rat u Irr_Qp|
    Cmp union_vs_threshold = Cmp::Less;   // against 2 sqrt(p-1)
    Cmp p_rat_qp_vs_threshold = Cmp::Less;
};

CharacterCounts character_count_report(const CharacterTable& X, const ClassTable& T, std::uint64_t p);

// Number of characters chi with chi o pm_k = chi.
std::size_t fixed_character_count(const CharacterTable& X, const ClassTable& T, std::int64_t k);

struct BrauerCheck {
    bool ok = true;
    std::uint64_t galois_elements = 0;   // k in (Z/e)^* checked
    std::size_t distinct_actions = 0;    // distinct class permutations among them
    std::string failure;
};

// For every k coprime to the exponent, fixed characters equal fixed classes; for
// odd p dividing |G|, the p-rational count equals galois_fixed_class_count and is
// at least k_{p'}.
BrauerCheck brauer_cross_check(const ClassTable& T, const CharacterTable& X);

// Generators of the subgroup of (Z/e)^* of units congruent to 1 modulo m (m | e).
std::vector<std::uint64_t> unit_subgroup_generators(std::uint64_t e, std::uint64_t m);

void write_character_table(const CharacterTable& X, const std::string& group_id, std::ostream& out);
// Re-reads and re-verifies against the class table.
CharacterTable read_character_table(std::istream& in, const ClassTable& T);

}  // namespace regclass
