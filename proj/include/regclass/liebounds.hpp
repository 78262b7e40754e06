#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regclass/numtheory.hpp"

namespace regclass {

// Families of simple groups of Lie type; a leading digit marks the twist.
enum class LieFamily { A, A2, B, C, D, D2, G2, B2_2, D4_3, F4, F4_2, E6, E6_2, E7, E8, G2_2 };

std::string family_name(LieFamily f);  // "A", "2A", ..., "3D4", "2G2"
LieFamily parse_lie_family(const std::string& name);
bool is_exceptional(LieFamily f);
// 2B2, 2F4 (q = 2^(2m+1)) and 2G2 (q = 3^(2m+1)).
bool is_suzuki_ree(LieFamily f);

struct LieParams {
    LieFamily family;
    unsigned r = 0;  // rank of the ambient algebraic group
    std::uint64_t q = 0;
    std::uint64_t ell = 0;
    unsigned f = 0;
    std::uint64_t d = 1;          // order of the diagonal automorphism group
    std::uint64_t out_order = 1;  // |Out(S)|
};

// Validates rank and field, and fills d and |Out|. Throws std::invalid_argument.
LieParams make_lie_params(LieFamily family, unsigned r, std::uint64_t q);

// q^r: number of semisimple classes of the simply connected group.
BigInt semisimple_class_count(const LieParams& P);

// |S| from the product of the factors q^i -+ 1 of the family.
BigInt lie_group_order(const LieParams& P);

struct BoundCertificate {
    std::string claim;
    std::string point;  // human-readable parameter point
    Enclosure lhs;
    Enclosure rhs;
    Verdict verdict = Verdict::Indeterminate;
};

// Compares enclosures, refining square-root terms on Indeterminate is the
// caller's job; this only records the comparison.
BoundCertificate make_certificate(std::string claim, std::string point, Enclosure lhs, Enclosure rhs);

// k_p' > q^r / (17 r^2). With an observed k_p' the comparison is exact
// (17 r^2 k > q^r); otherwise the family's proof-chain lower bound is used.
// For the Suzuki-Ree families the field size is 2^(2m+1) or 3^(2m+1) and q^r
// is read as field_size^(r/2).
BoundCertificate rank_bound_certify(const LieParams& P, std::optional<std::uint64_t> k_pprime_observed = {},
                              unsigned constant = 17);

// Proof-chain lower bound on k_p'(S), valid for every prime p.
Enclosure kpprime_chain_lower(const LieParams& P);

struct TorusOrbitBound {
    bool p_divides_m = false;  // true: bound on n(Aut, Cl_p); false: on n(Aut, Cl_p')
    BigInt m;
    Rational bound;
};
// PSL_n(q) Singer-type torus: m = (q^n - 1) / ((q - 1) gcd(n, q - 1)).
TorusOrbitBound psl_torus_orbit_bound(unsigned n, std::uint64_t q, std::uint64_t p);

struct ProportionBounds {
    Rational p_regular;        // lower bound on |G_p'| / |G|
    bool p_regular_strict = false;
    Rational p_element;        // lower bound on |G_p| / |G| (0 when none)
};
// Strongly self-centralizing subgroup T with Weyl quotient w.
ProportionBounds ssc_torus_bounds(const BigInt& order_T, std::uint64_t w, bool p_divides_T);
// Several pairwise non-conjugate such subgroups, none of order divisible by p:
// |G_p'| / |G| > sum 1/(w_i + 1).
Rational ssc_coprime_sum(const std::vector<std::uint64_t>& weyl_orders);

// Least x >= 1 with q^x >= n + 1, and the least odd such x.
unsigned centralizer_exponent(unsigned n, std::uint64_t q, bool odd);
// H(n,q,+) = 1/(e r), H(n,q,-) = ((q^2-1) / (e r' (q+1)^2))^(1/2).
Enclosure min_centralizer_H(unsigned n, std::uint64_t q, int epsilon);

// PSp_2n(q) and Omega_2n+1(q) lower bounds on k_p'. Require p >= 3 and p not dividing q.
BigInt symplectic_kpprime_lower(unsigned n, std::uint64_t q, std::uint64_t p);
BigInt odd_orthogonal_kpprime_lower(unsigned n, std::uint64_t q, std::uint64_t p);
// Unipotent part of the symplectic bound: number of admissible Jordan forms.
BigInt symplectic_unipotent_lower(unsigned n, std::uint64_t q);

// P-Omega_2n^eps(q), n >= 4: lower bound on unipotent classes. For even q and
// eps = +, pairs {i, j} of distinct odd parts are unordered.
BigInt orthogonal_unipotent_lower(unsigned n, std::uint64_t q, int epsilon);
// Aut-orbits of p-regular semisimple classes; p odd, (n, eps) != (4, +).
BigInt orthogonal_semisimple_orbit_lower(unsigned n, std::uint64_t q, int epsilon, std::uint64_t p);

// Expression for a torus order or a prime bound.
struct TorusExpr {
    enum class Kind { Cyclotomic, TwistedPlus, TwistedMinus } kind = Kind::Cyclotomic;
    unsigned n = 1;              // Phi_n, or twisted Phi_4 / Phi_6 / Phi_12
    int gcd_sign = 0;            // divide by gcd(gcd_mod, q - gcd_sign) when nonzero
    unsigned gcd_mod = 1;
    std::string label;
    BigInt eval(std::uint64_t q) const;
};

struct TorusRow {
    TorusExpr order;
    std::uint64_t weyl = 1;
    std::string condition;  // "", "q != 1 mod 3", "q != 2 mod 3"
    bool applies(std::uint64_t q) const;
};

struct ExceptionalData {
    TorusExpr prime_bound;  // upper bound for the largest prime divisor of |S|
    std::vector<TorusRow> tori;
};
ExceptionalData exceptional_data(LieFamily f);

// The smallest field sizes for which an exceptional family gives a simple group
// (twisted families start at m = 1).
std::vector<std::uint64_t> smallest_valid_q(LieFamily f, std::size_t count = 3);

struct PrimeBoundCheck {
    LieFamily family;
    std::uint64_t q;
    std::uint64_t largest_prime;
    BigInt bound;
    bool ok;
};
// Largest prime factor of |S| against the tabulated bound.
PrimeBoundCheck check_prime_bound(LieFamily f, std::uint64_t q);

// ----------------------------------------------------------------------------
// Grid claims

struct GridSpec {
    enum class Kind { PrimePowers, OddPowers } kind = Kind::PrimePowers;
    std::uint64_t lo = 0, hi = 0;  // q range for PrimePowers, exponent range for OddPowers
    std::uint64_t base = 2;        // OddPowers: q = base^k with k odd
    std::vector<std::uint64_t> exclude;
    std::uint64_t residue_mod = 0;  // drop q with q % residue_mod == residue_skip
    std::uint64_t residue_skip = 0;
    std::vector<std::uint64_t> explicit_points;  // overrides the range when non-empty

    std::vector<std::uint64_t> points() const;
};

struct Claim {
    std::string id;
    std::string description;
    std::string expression;  // evaluator id
    bool strict = true;      // claim is lhs > rhs (else lhs >= rhs)
    GridSpec grid;
    std::vector<std::uint64_t> expected_exceptions;
};

struct GridResult {
    Claim claim;
    std::vector<BoundCertificate> certificates;
    std::vector<std::uint64_t> exceptions;
    bool matches_expected = false;
};

// Built-in expression ids: "psl3_torus", "suzuki_torus", "g2_torus".
std::vector<std::string> claim_expressions();
BoundCertificate evaluate_claim_point(const std::string& expression, std::uint64_t q);

std::vector<Claim> load_claims(const std::string& path);
std::vector<Claim> parse_claims(const std::string& json_text);
GridResult grid_certify(const Claim& claim);
// Parses "LO..HI" or "a,b,c" into a grid override.
GridSpec parse_grid_override(const GridSpec& base, const std::string& text);

}  // namespace regclass
